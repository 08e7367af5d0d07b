// Command-line front end for the partition wreath calculator: exact
// enumeration, moment/cumulant tables, fusion decompositions, morphism
// space dimensions, verification suites, and action reports, emitted as
// deterministic JSON (and CSV for tabular data) with golden-file
// comparison support.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wreath/action.hpp"
#include "wreath/freeprob.hpp"
#include "wreath/fusion.hpp"
#include "wreath/operators.hpp"
#include "wreath/report.hpp"
#include "wreath/verify.hpp"

using namespace wreath;

namespace {

// Exit codes: 0 clean, 1 violations or golden mismatch, 2 configuration
// error, 3 bound exceeded.
constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kConfigError = 2;
constexpr int kBoundError = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FiniteGroup parse_group(const std::string& name) {
    if (name == "S3") return FiniteGroup::symmetric(3);
    std::vector<int> orders;
    size_t pos = 0;
    while (pos < name.size()) {
        if (name[pos] != 'Z') throw ConfigError("unknown group: " + name);
        ++pos;
        size_t end = name.find('x', pos);
        std::string num = name.substr(pos, end == std::string::npos
                                               ? std::string::npos
                                               : end - pos);
        try {
            orders.push_back(std::stoi(num));
        } catch (const std::exception&) {
            throw ConfigError("unknown group: " + name);
        }
        if (orders.back() < 1) throw ConfigError("unknown group: " + name);
        pos = end == std::string::npos ? name.size() : end + 1;
    }
    if (orders.empty()) throw ConfigError("unknown group: " + name);
    return FiniteGroup::cyclic_product(orders);
}

// Spec grammar: FAMILY, FAMILY[G] (per-block product constraint over an
// abelian G), FAMILY@G (all G-colourings).
CategorySpec parse_spec(const std::string& text) {
    auto bracket = text.find('[');
    auto at = text.find('@');
    try {
        if (bracket != std::string::npos) {
            if (text.back() != ']') throw ConfigError("bad spec: " + text);
            auto fam = parse_family(text.substr(0, bracket));
            auto g = parse_group(
                text.substr(bracket + 1, text.size() - bracket - 2));
            return CategorySpec::gamma_coloured(fam, std::move(g));
        }
        if (at != std::string::npos) {
            auto fam = parse_family(text.substr(0, at));
            return CategorySpec::group_coloured(
                fam, parse_group(text.substr(at + 1)));
        }
        return CategorySpec::uncoloured(parse_family(text));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("bad colour word: " + text);
        }
    }
    return out;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string word_text(const std::vector<int>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

Json fusion_word_json(const FusionWord& w) {
    Json arr = Json::array();
    for (const auto& c : w) arr.push_back(word_text(c.word));
    return arr;
}

Json report_json(const VerifyReport& rep) {
    Json j;
    j["cases"] = rep.cases;
    j["violations"] = rep.violations;
    return j;
}

Json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
}

// Options common to every subcommand.
struct OutputOpts {
    std::string emit = "json";
    std::string out_path;
    std::string golden_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--emit", o.emit, "Output format")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    cmd->add_option("--out", o.out_path, "Write the report to this file");
    cmd->add_option("--golden", o.golden_path,
                    "Compare the emitted report against this golden file");
}

int finish(const Report& rep, const OutputOpts& o, const std::string& csv) {
    std::string body;
    if (o.emit == "json") {
        body = rep.to_string();
    } else if (o.emit == "csv") {
        if (csv.empty())
            throw ConfigError("this subcommand has no CSV rendering");
        body = csv;
    } else {
        if (csv.empty())
            throw ConfigError("this subcommand has no CSV rendering");
        body = rep.to_string() + csv;
    }
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot write: " + o.out_path);
        f << body;
    } else {
        std::cout << body;
    }
    if (!o.golden_path.empty()) {
        std::string diff;
        try {
            if (!golden_compare(body, o.golden_path, &diff)) {
                std::cerr << "golden mismatch: " << diff << "\n";
                return kViolations;
            }
        } catch (const std::runtime_error& e) {
            throw ConfigError(e.what());
        }
    }
    return rep.violations.empty() ? kOk : kViolations;
}

const char* kMomentNote =
    "moment weights use group_order^(block size - 1) per block; the "
    "alternative reading (block size)^(group order - 1) is inconsistent "
    "with the cumulant identities and the exact rank cross-checks, and "
    "is not used";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for partition wreath products"};
    app.require_subcommand(1);

    // ---- enumerate -------------------------------------------------
    auto* c_enum = app.add_subcommand("enumerate",
                                      "Count diagrams of a family or spec");
    std::string e_family = "NC", e_spec;
    std::vector<int> e_points{0, 0};
    OutputOpts e_out;
    c_enum->add_option("--family", e_family, "Base family name");
    c_enum->add_option("--spec", e_spec,
                       "Coloured spec (overrides --family)");
    c_enum->add_option("--points", e_points, "Upper and lower point counts")
        ->expected(2);
    add_output_opts(c_enum, e_out);

    // ---- moments / cumulants ---------------------------------------
    auto* c_mom = app.add_subcommand("moments",
                                     "Moment table of a character law");
    auto* c_cum = app.add_subcommand("cumulants",
                                     "Free cumulant table of a character law");
    std::string m_category = "NC";
    long m_group_order = 2;
    int m_nmax = 4, m_N = 4;
    bool m_against_rank = false;
    OutputOpts m_out, k_out;
    for (auto* c : {c_mom, c_cum}) {
        c->add_option("--category", m_category, "Base family name");
        c->add_option("--group-order", m_group_order, "Order of the group");
        c->add_option("--n-max", m_nmax, "Largest moment order");
    }
    c_mom->add_flag("--against-rank", m_against_rank,
                    "Cross-check against exact morphism-space ranks");
    c_mom->add_option("--N", m_N, "Dimension parameter for the rank check");
    add_output_opts(c_mom, m_out);
    add_output_opts(c_cum, k_out);

    // ---- fusion -----------------------------------------------------
    auto* c_fus = app.add_subcommand("fusion",
                                     "Fusion classes and decompositions");
    std::string f_spec = "NC2";
    std::vector<std::string> f_words;
    int f_maxlen = 4, f_N = 4;
    bool f_decompose = false, f_cross = false;
    OutputOpts f_out;
    c_fus->add_option("--spec", f_spec, "Category spec");
    c_fus->add_option("--word", f_words,
                      "Comma-separated colour letters (repeatable)");
    c_fus->add_option("--max-word-len", f_maxlen, "Word length bound");
    c_fus->add_flag("--decompose", f_decompose,
                    "Decompose the tensor products of the given words");
    c_fus->add_flag("--cross-check", f_cross,
                    "Compare multiplicity pairings with exact ranks");
    c_fus->add_option("--N", f_N, "Dimension parameter for the cross-check");
    add_output_opts(c_fus, f_out);

    // ---- dim-mor ----------------------------------------------------
    auto* c_dim = app.add_subcommand("dim-mor",
                                     "Exact morphism space dimension");
    std::string d_spec = "NC", d_upper, d_lower;
    int d_N = 4;
    OutputOpts d_out;
    c_dim->add_option("--spec", d_spec, "Category spec");
    c_dim->add_option("--N", d_N, "Dimension parameter");
    c_dim->add_option("--upper", d_upper, "Upper boundary colour word");
    c_dim->add_option("--lower", d_lower, "Lower boundary colour word");
    add_output_opts(c_dim, d_out);

    // ---- verify -----------------------------------------------------
    auto* c_ver = app.add_subcommand("verify", "Run identity suites");
    std::string v_suite = "all", v_group = "Z2";
    int v_N = 2, v_maxpts = 3;
    OutputOpts v_out;
    c_ver->add_option("--suite", v_suite, "Suite name")
        ->check(CLI::IsMember(
            {"T", "M", "F", "P", "equivariance", "all"}));
    c_ver->add_option("--group", v_group, "Group name (Zn, ZnxZm, S3)");
    c_ver->add_option("--N", v_N, "Dimension parameter");
    c_ver->add_option("--max-points", v_maxpts, "Point bound");
    add_output_opts(c_ver, v_out);

    // ---- actions ----------------------------------------------------
    auto* c_act = app.add_subcommand("actions",
                                     "Reports relative to a group action");
    std::string a_config, a_kind = "regular", a_group = "Z2",
                a_family = "NC";
    int a_set_size = 2, a_N = 4, a_nmax = 3, a_closure_pts = 3;
    OutputOpts a_out;
    c_act->add_option("config", a_config,
                      "JSON action config (group, set_size, map, "
                      "optional involution)");
    c_act->add_option("--action", a_kind, "Built-in action")
        ->check(CLI::IsMember({"trivial", "regular"}));
    c_act->add_option("--group", a_group, "Group name for built-ins");
    c_act->add_option("--set-size", a_set_size,
                      "Set size for the trivial built-in");
    c_act->add_option("--family", a_family, "Base family name");
    c_act->add_option("--N", a_N, "Dimension parameter");
    c_act->add_option("--n-max", a_nmax, "Largest word length for ranks");
    c_act->add_option("--closure-points", a_closure_pts,
                      "Point bound for the closure check");
    add_output_opts(c_act, a_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*c_enum) {
            Json cfg{{"family", e_family},
                     {"spec", e_spec},
                     {"k", e_points[0]},
                     {"l", e_points[1]}};
            auto rep = make_report("enumerate", cfg);
            long count;
            std::string label;
            if (!e_spec.empty()) {
                auto spec = parse_spec(e_spec);
                count = (long)spec.enumerate(e_points[0], e_points[1]).size();
                label = spec.name();
            } else {
                count = (long)enumerate_family(parse_family(e_family),
                                               e_points[0], e_points[1])
                            .size();
                label = e_family;
            }
            rep.results["count"] = count;
            std::string csv = csv_table(
                {"spec", "k", "l", "count"},
                {{label, std::to_string(e_points[0]),
                  std::to_string(e_points[1]), std::to_string(count)}});
            return finish(rep, e_out, csv);
        }

        if (*c_mom || *c_cum) {
            bool cum_only = static_cast<bool>(*c_cum);
            Json cfg{{"category", m_category},
                     {"group_order", m_group_order},
                     {"n_max", m_nmax}};
            if (!cum_only) {
                cfg["against_rank"] = m_against_rank;
                cfg["N"] = m_N;
            }
            auto rep =
                make_report(cum_only ? "cumulants" : "moments", cfg);
            Family fam = parse_family(m_category);
            auto m = wreath_moments(fam, m_group_order, m_nmax);
            auto kappa = moments_to_cumulants(m);
            Json mj = Json::array(), kj = Json::array();
            for (int n = 0; n <= m_nmax; ++n) mj.push_back(rat_str(m.m[n]));
            for (int n = 1; n <= m_nmax; ++n)
                kj.push_back(rat_str(kappa.kappa[n]));
            if (!cum_only) rep.results["moments"] = mj;
            rep.results["cumulants"] = kj;
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"n", "moment", "cumulant"};
            Json agree = Json::array();
            if (!cum_only && m_against_rank) header.push_back("rank");
            for (int n = 1; n <= m_nmax; ++n) {
                std::vector<std::string> row{std::to_string(n),
                                             rat_str(m.m[n]),
                                             rat_str(kappa.kappa[n])};
                if (!cum_only && m_against_rank) {
                    auto G = FiniteGroup::cyclic_product(
                        {(int)m_group_order});
                    auto spec = CategorySpec::group_coloured(fam, G);
                    long r = dim_mor_M(spec, G, m_N, 0, n);
                    row.push_back(std::to_string(r));
                    bool ok = Rat(r) == m.m[n];
                    agree.push_back(ok);
                    if (!ok)
                        rep.violations.push_back(
                            "moment/rank mismatch at n = " +
                            std::to_string(n));
                }
                rows.push_back(std::move(row));
            }
            if (!cum_only && m_against_rank)
                rep.results["rank_agrees"] = agree;
            rep.notes.push_back(kMomentNote);
            return finish(rep, cum_only ? k_out : m_out,
                          csv_table(header, rows));
        }

        if (*c_fus) {
            Json cfg{{"spec", f_spec},
                     {"words", f_words},
                     {"max_word_len", f_maxlen},
                     {"decompose", f_decompose},
                     {"cross_check", f_cross},
                     {"N", f_N}};
            auto rep = make_report("fusion", cfg);
            FusionSystem fs(parse_spec(f_spec), f_maxlen);
            Json classes = Json::array();
            for (const auto& c : fs.classes())
                classes.push_back(word_text(c.word));
            rep.results["classes"] = classes;
            Json stars = Json::object();
            for (const auto& a : fs.classes())
                for (const auto& b : fs.classes()) {
                    auto s = fs.star(a, b);
                    stars[word_text(a.word) + " * " + word_text(b.word)] =
                        s ? Json(word_text(s->word)) : Json(nullptr);
                }
            rep.results["star"] = stars;
            Json conjs = Json::object();
            for (const auto& a : fs.classes())
                conjs[word_text(a.word)] = word_text(fs.conj(a).word);
            rep.results["conj"] = conjs;
            std::vector<std::vector<int>> words;
            for (const auto& w : f_words) words.push_back(parse_word(w));
            if (f_decompose) {
                Json dec = Json::object();
                for (const auto& w : words) {
                    Json terms = Json::array();
                    for (const auto& [term, mult] :
                         fs.tensor_letters(w).terms) {
                        Json t;
                        t["word"] = fusion_word_json(term);
                        t["multiplicity"] = mult;
                        terms.push_back(t);
                    }
                    dec[word_text(w)] = terms;
                }
                rep.results["decompositions"] = dec;
            }
            if (f_cross) {
                auto cc = cross_check_dim(fs, words, f_N);
                rep.results["cross_check"] = report_json(cc);
                for (const auto& v : cc.violations)
                    rep.violations.push_back(v);
            }
            return finish(rep, f_out, "");
        }

        if (*c_dim) {
            Json cfg{{"spec", d_spec},
                     {"N", d_N},
                     {"upper", d_upper},
                     {"lower", d_lower}};
            auto rep = make_report("dim-mor", cfg);
            auto spec = parse_spec(d_spec);
            auto up = parse_word(d_upper);
            auto lo = parse_word(d_lower);
            long dim = dim_mor_T(spec, d_N, up, lo);
            rep.results["dim"] = dim;
            std::string csv =
                csv_table({"spec", "N", "upper", "lower", "dim"},
                          {{spec.name(), std::to_string(d_N), d_upper,
                            d_lower, std::to_string(dim)}});
            return finish(rep, d_out, csv);
        }

        if (*c_ver) {
            Json cfg{{"suite", v_suite},
                     {"group", v_group},
                     {"N", v_N},
                     {"max_points", v_maxpts}};
            auto rep = make_report("verify", cfg);
            auto G = parse_group(v_group);
            auto run = [&](const std::string& name, VerifyReport r) {
                rep.results[name] = report_json(r);
                for (const auto& v : r.violations)
                    rep.violations.push_back(name + ": " + v);
            };
            bool all = v_suite == "all";
            if (all || v_suite == "T") {
                int b = std::min(v_maxpts, 2);
                run("T_composition", verify_T_ops(b, b, b, {v_N}));
                run("T_coloured", verify_T_coloured(G, v_N, v_maxpts));
            }
            if (all || v_suite == "M") {
                run("M_composition_formal",
                    verify_M_composition_formal(G, v_maxpts));
                run("M_composition_direct",
                    verify_M_composition_direct(G, v_N,
                                                std::min(v_maxpts, 2)));
            }
            if (all || v_suite == "F") {
                if (!G.is_abelian())
                    throw ConfigError(
                        "the F suite needs an abelian group");
                run("F_expansion", verify_F_expansion(G, v_maxpts));
                run("F_composition",
                    verify_F_composition_formal(G, v_maxpts));
                run("F_composition_direct",
                    verify_F_composition_direct(G, v_N,
                                                std::min(v_maxpts + 1, 5)));
            }
            if (all || v_suite == "P") {
                if (!G.is_abelian())
                    throw ConfigError(
                        "the P suite needs an abelian group");
                run("P_projections", verify_P(G, v_N));
            }
            if (all || v_suite == "equivariance") {
                auto spec = CategorySpec::group_coloured(Family::ALL, G);
                for (int k = 0; k <= 1; ++k)
                    for (int l = 1; k + l <= std::min(v_maxpts, 3); ++l)
                        run("equivariance_" + std::to_string(k) + "_" +
                                std::to_string(l),
                            verify_equivariance(spec, G, v_N, k, l));
            }
            return finish(rep, v_out, "");
        }

        if (*c_act) {
            Json cfg{{"config", a_config}, {"action", a_kind},
                     {"group", a_group},   {"set_size", a_set_size},
                     {"family", a_family}, {"N", a_N},
                     {"n_max", a_nmax},    {"closure_points", a_closure_pts}};
            auto rep = make_report("actions", cfg);
            std::optional<GroupAction> act;
            std::optional<std::vector<int>> involution;
            if (!a_config.empty()) {
                Json j = load_config_file(a_config);
                try {
                    auto G = parse_group(j.at("group").get<std::string>());
                    act.emplace(std::move(G), j.at("set_size").get<int>(),
                                j.at("map")
                                    .get<std::vector<std::vector<int>>>());
                    if (j.contains("involution"))
                        involution =
                            j["involution"].get<std::vector<int>>();
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(e.what());
                } catch (const Json::exception& e) {
                    throw ConfigError(e.what());
                }
            } else if (a_kind == "trivial") {
                act.emplace(
                    GroupAction::trivial(parse_group(a_group), a_set_size));
            } else {
                act.emplace(
                    GroupAction::left_translation(parse_group(a_group)));
            }
            rep.results["classification"] =
                action_class_name(classify(*act));
            rep.results["orbits"] = (long)act->orbits().size();
            rep.results["kernel_size"] = (long)act->kernel().size();
            auto red = reduce_action(*act);
            rep.results["faithful_group_order"] =
                (long)red.action.group().size();
            Family fam = parse_family(a_family);
            Json ranks = Json::array();
            for (int n = 1; n <= a_nmax; ++n)
                ranks.push_back(span_rank_alpha(fam, *act, a_N, n));
            rep.results["span_ranks"] = ranks;
            auto cl = closure_check_alpha(fam, *act, std::min(a_N, 2),
                                          a_closure_pts);
            rep.results["closure"] = report_json(cl);
            for (const auto& v : cl.violations) rep.violations.push_back(v);
            if (involution)
                rep.results["coloured_action"] =
                    coloured_action_check(*act, *involution);
            return finish(rep, a_out, "");
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::length_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kBoundError;
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        if (msg.find("out of range") != std::string::npos ||
            msg.find("bound") != std::string::npos) {
            std::cerr << "bound exceeded: " << msg << "\n";
            return kBoundError;
        }
        std::cerr << "config error: " << msg << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kOk;
}
