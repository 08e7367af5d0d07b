#include "wreath/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath {

namespace {
ColourSet group_colours(const FiniteGroup& G, bool conj_is_inverse) {
    std::vector<std::string> names;
    std::vector<int> conj;
    for (int g = 0; g < G.size(); ++g) {
        names.push_back(G.name(g));
        conj.push_back(conj_is_inverse ? G.inverse(g) : g);
    }
    return ColourSet::from_names(std::move(names), std::move(conj));
}
}  // namespace

CategorySpec CategorySpec::uncoloured(Family f) {
    CategorySpec s;
    s.kind_ = ColouringKind::Uncoloured;
    s.family_ = f;
    s.colours_ = ColourSet::single();
    return s;
}

CategorySpec CategorySpec::group_coloured(Family f, FiniteGroup G) {
    CategorySpec s;
    s.kind_ = ColouringKind::GroupColoured;
    s.family_ = f;
    s.colours_ = group_colours(G, /*conj_is_inverse=*/false);
    s.group_ = std::move(G);
    return s;
}

CategorySpec CategorySpec::gamma_coloured(Family f, FiniteGroup Gamma) {
    if (!Gamma.is_abelian())
        throw std::invalid_argument(
            "product-constrained colourings need an abelian group");
    CategorySpec s;
    s.kind_ = ColouringKind::GammaColoured;
    s.family_ = f;
    s.colours_ = group_colours(Gamma, /*conj_is_inverse=*/true);
    s.group_ = std::move(Gamma);
    return s;
}

CategorySpec CategorySpec::two_colour_mod_s(int s) {
    if (s != kInfinity && s < 1)
        throw std::invalid_argument("modulus must be >= 1 or infinity");
    CategorySpec spec;
    spec.kind_ = ColouringKind::TwoColourModS;
    spec.family_ = Family::NC;
    spec.colours_ = ColourSet::two_colour();
    spec.s_ = s;
    return spec;
}

CategorySpec CategorySpec::generated(std::vector<ColouredPartition> gens,
                                     ColourSet cs, int max_points) {
    CategorySpec s;
    s.kind_ = ColouringKind::Generated;
    s.colours_ = cs;
    s.max_points_ = max_points;
    s.members_ = closure(gens, cs, max_points);
    return s;
}

const FiniteGroup& CategorySpec::group() const {
    if (!group_) throw std::logic_error("category has no group");
    return *group_;
}

std::string CategorySpec::name() const {
    switch (kind_) {
        case ColouringKind::Uncoloured:
            return family_name(family_);
        case ColouringKind::GroupColoured:
            return std::string(family_name(family_)) + "^G(|G|=" +
                   std::to_string(group_->size()) + ")";
        case ColouringKind::GammaColoured:
            return std::string(family_name(family_)) + "[Gamma(|Gamma|=" +
                   std::to_string(group_->size()) + ")]";
        case ColouringKind::TwoColourModS:
            return "NC_two-colour mod " +
                   (s_ == kInfinity ? std::string("inf") : std::to_string(s_));
        case ColouringKind::Generated:
            return "generated(" + std::to_string(members_.size()) +
                   " members, <= " + std::to_string(max_points_) + " points)";
    }
    return "?";
}

bool CategorySpec::contains(const ColouredPartition& p) const {
    for (int c : p.colours)
        if (c < 0 || c >= colours_.size())
            throw std::invalid_argument("colour outside the category's set");
    switch (kind_) {
        case ColouringKind::Uncoloured:
            return family_member(family_, p.base);
        case ColouringKind::GroupColoured:
            return family_member(family_, p.base);
        case ColouringKind::GammaColoured: {
            if (!family_member(family_, p.base)) return false;
            const FiniteGroup& G = *group_;
            int b = p.base.num_blocks();
            std::vector<int> up(b, G.identity()), down(b, G.identity());
            for (int i = 0; i < p.base.points(); ++i) {
                int id = p.base.block[(size_t)i];
                if (i < p.base.k)
                    up[(size_t)id] = G.mult(up[(size_t)id], p.colours[(size_t)i]);
                else
                    down[(size_t)id] = G.mult(down[(size_t)id], p.colours[(size_t)i]);
            }
            return up == down;
        }
        case ColouringKind::TwoColourModS: {
            if (!is_noncrossing(p.base)) return false;
            int b = p.base.num_blocks();
            std::vector<int> up(b, 0), down(b, 0);
            for (int i = 0; i < p.base.points(); ++i) {
                int d = p.colours[(size_t)i] == 0 ? 1 : -1;  // white - black
                if (i < p.base.k)
                    up[(size_t)p.base.block[(size_t)i]] += d;
                else
                    down[(size_t)p.base.block[(size_t)i]] += d;
            }
            for (int j = 0; j < b; ++j) {
                int diff = up[(size_t)j] - down[(size_t)j];
                if (s_ == kInfinity ? diff != 0 : diff % s_ != 0) return false;
            }
            return true;
        }
        case ColouringKind::Generated:
            if (p.base.points() > max_points_)
                throw std::length_error(
                    "membership undecided beyond the closure bound");
            return members_.count(p) > 0;
    }
    return false;
}

std::vector<ColouredPartition> CategorySpec::enumerate(int k, int l,
                                                       int bound) const {
    if (k + l > bound)
        throw std::length_error("enumeration bound exceeded");
    std::vector<ColouredPartition> out;
    if (kind_ == ColouringKind::Generated) {
        for (const auto& p : members_)
            if (p.base.k == k && p.base.l == l) out.push_back(p);
        return out;
    }
    int nc = colours_.size();
    for (const auto& base : enumerate_family(family_, k, l, bound)) {
        std::vector<int> word((size_t)(k + l), 0);
        while (true) {
            ColouredPartition cp{base, word};
            if (contains(cp)) out.push_back(cp);
            int i = k + l - 1;
            for (; i >= 0; --i) {
                if (++word[(size_t)i] < nc) break;
                word[(size_t)i] = 0;
            }
            if (i < 0) break;
            if (k + l == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ColouredPartition> CategorySpec::enumerate_boundary(
    const std::vector<int>& upper_word, const std::vector<int>& lower_word,
    int bound) const {
    int k = (int)upper_word.size(), l = (int)lower_word.size();
    if (k + l > bound) throw std::length_error("enumeration bound exceeded");
    std::vector<ColouredPartition> out;
    if (kind_ == ColouringKind::Generated) {
        for (const auto& p : members_)
            if (p.base.k == k && p.base.l == l &&
                p.upper_colours() == upper_word &&
                p.lower_colours() == lower_word)
                out.push_back(p);
        return out;
    }
    for (const auto& base : enumerate_family(family_, k, l, bound)) {
        ColouredPartition cp = colour_rows(base, upper_word, lower_word);
        if (contains(cp)) out.push_back(cp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<ColouredPartition> closure(
    const std::vector<ColouredPartition>& generators, const ColourSet& cs,
    int max_points) {
    if (max_points > 12)
        throw std::length_error("closure bound exceeds 12 points");
    std::set<ColouredPartition> members;
    for (int c = 0; c < cs.size(); ++c)
        members.insert(ColouredPartition{identity_partition(), {c, c}});
    for (const auto& g : generators)
        if (g.base.points() <= max_points) members.insert(g);
    bool grew = true;
    auto add = [&](const ColouredPartition& p) {
        if (p.base.points() <= max_points && members.insert(p).second)
            grew = true;
    };
    while (grew) {
        grew = false;
        std::vector<ColouredPartition> snapshot(members.begin(),
                                                members.end());
        for (const auto& p : snapshot) {
            add(involution(p));
            if (p.base.k > 0) {
                add(rotate(p, Corner::UpperLeft, cs));
                add(rotate(p, Corner::UpperRight, cs));
            }
            if (p.base.l > 0) {
                add(rotate(p, Corner::LowerLeft, cs));
                add(rotate(p, Corner::LowerRight, cs));
            }
            for (const auto& q : snapshot) {
                if (p.base.points() + q.base.points() <= max_points)
                    add(tensor(p, q));
                if (composable(p, q))
                    add(compose(p, q).result);
                if (composable(q, p))
                    add(compose(q, p).result);
            }
        }
    }
    return members;
}

CategorySpec abelianize(const CategorySpec& spec) {
    auto map_family = [](Family f) {
        switch (f) {
            case Family::NC: return Family::ALL;
            case Family::NC2: return Family::PAIR;
            case Family::NCEV: return Family::EVEN;
            default: return f;
        }
    };
    switch (spec.kind()) {
        case ColouringKind::Uncoloured:
            return CategorySpec::uncoloured(map_family(spec.base_family()));
        case ColouringKind::GroupColoured:
            return CategorySpec::group_coloured(map_family(spec.base_family()),
                                                spec.group());
        case ColouringKind::GammaColoured:
            return CategorySpec::gamma_coloured(map_family(spec.base_family()),
                                                spec.group());
        default:
            throw std::invalid_argument(
                "abelianization is defined for named-family specs only");
    }
}

ColouredPartition block_of(const ColouredPartition& p, int id) {
    int k = 0, l = 0;
    std::vector<int> raw, cols;
    for (int i = 0; i < p.base.points(); ++i) {
        if (p.base.block[(size_t)i] != id) continue;
        (i < p.base.k ? k : l) += 1;
        raw.push_back(0);
        cols.push_back(p.colours[(size_t)i]);
    }
    return ColouredPartition{canonicalize(k, l, raw), cols};
}

bool is_block_stable(const CategorySpec& spec, int max_points) {
    if (max_points > 10)
        throw std::length_error("block-stability bound exceeds 10 points");
    for (int k = 0; k <= max_points; ++k)
        for (int l = 0; k + l <= max_points; ++l)
            for (const auto& p : spec.enumerate(k, l, max_points))
                for (int id = 0; id < p.base.num_blocks(); ++id)
                    if (!spec.contains(block_of(p, id))) return false;
    return true;
}

}  // namespace wreath
