// bifixlab: generate, inspect and verify automata of bifix-free languages.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 input or usage error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bifix/atoms.hpp"
#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"
#include "bifix/io.hpp"
#include "bifix/minimize.hpp"
#include "bifix/ops.hpp"
#include "bifix/report.hpp"
#include "bifix/semigroup.hpp"
#include "bifix/witnesses.hpp"

namespace {

using bifix::Dfa;

Dfa load_dfa(const std::string& path) {
    if (path == "-") return bifix::parse_dfa(std::cin);
    std::ifstream in(path);
    if (!in) throw bifix::input_error("cannot open file: " + path);
    return bifix::parse_dfa(in);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw bifix::input_error("cannot open output file: " + out_path);
    out << text;
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

std::vector<std::pair<std::string, std::string>> parse_map_flag(const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> mapping;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw bifix::input_error("--map entries look like x=y or x=- (got '" + item + "')");
        std::string letter = item.substr(0, eq);
        std::string source = item.substr(eq + 1);
        if (letter.empty() || source.empty())
            throw bifix::input_error("--map entries look like x=y or x=- (got '" + item + "')");
        if (source == "-") continue; // explicit deletion
        mapping.emplace_back(letter, source);
    }
    return mapping;
}

int emit_report(const bifix::Report& report, bool json) {
    std::cout << (json ? bifix::to_json(report) : bifix::to_text(report));
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"automata laboratory for bifix-free regular languages"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand

    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON instead of text");

    bifix::Limits limits = bifix::Limits::from_env();
    app.add_option("--max-states", limits.max_states,
                   "cap on powerset/pair-automaton states");
    app.add_option("--max-elements", limits.max_elements,
                   "cap on semigroup closure elements");

    // witness -----------------------------------------------------------
    auto* witness = app.add_subcommand("witness", "generate a witness DFA");
    std::string family;
    witness->add_option("family", family, "one of: unary, ternary, ternary-dialect, wstream, atoms, revmagic, random")
        ->required();
    int wn = 0;
    witness->add_option("-n,--states", wn, "state count")->required();
    long long alpha = -1;
    witness->add_option("--alpha", alpha, "target reversal complexity (revmagic)");
    int letters = 3;
    witness->add_option("--letters", letters, "alphabet size (random)");
    std::uint64_t seed = 0;
    witness->add_option("--seed", seed, "seed (random)");
    std::string out_path;
    witness->add_option("-o,--output", out_path, "output file (default stdout)");

    // check --------------------------------------------------------------
    auto* check = app.add_subcommand("check", "structural report on a DFA file");
    std::string check_file;
    check->add_option("file", check_file, "DFA file ('-' for stdin)")->required();

    // op -----------------------------------------------------------------
    auto* op = app.add_subcommand("op", "apply an operation; prints the minimal result DFA");
    std::string op_kind;
    op->add_option("kind", op_kind, "union | inter | diff | symdiff | concat | star | reverse")
        ->required();
    std::vector<std::string> op_files;
    op->add_option("files", op_files, "one file for star/reverse, two otherwise")
        ->expected(1, 2);
    std::string op_out;
    op->add_option("-o,--output", op_out, "output file (default stdout)");

    // semigroup ------------------------------------------------------------
    auto* semigroup = app.add_subcommand("semigroup", "transition semigroup of the minimal DFA");
    std::string sg_file;
    semigroup->add_option("file", sg_file, "DFA file ('-' for stdin)")->required();
    bool sg_classify = false, sg_pairs = false;
    semigroup->add_flag("--classify", sg_classify, "count elements per transformation type");
    semigroup->add_flag("--pairs", sg_pairs, "list colliding and focused middle-state pairs");

    // atoms ----------------------------------------------------------------
    auto* atoms_cmd = app.add_subcommand("atoms", "atoms and their quotient complexities");
    std::string atoms_file;
    atoms_cmd->add_option("file", atoms_file, "DFA file ('-' for stdin)")->required();

    // dialect ---------------------------------------------------------------
    auto* dialect_cmd = app.add_subcommand("dialect", "permute or delete letters");
    std::string dialect_file, map_spec, dialect_out;
    dialect_cmd->add_option("file", dialect_file, "DFA file ('-' for stdin)")->required();
    dialect_cmd->add_option("--map", map_spec,
                            "comma list: x=y gives x the transformation of y, x=- deletes x; "
                            "unmentioned letters are deleted")
        ->required();
    dialect_cmd->add_option("-o,--output", dialect_out, "output file (default stdout)");

    // table -------------------------------------------------------------
    auto* table = app.add_subcommand("table", "reproduce the operation-complexity table");
    auto* table_ops_cmd = table->add_subcommand("ops", "basic operations on the ternary pair");
    int tm = 9, tn = 9;
    table_ops_cmd->add_option("--m", tm, "left operand size")->required();
    table_ops_cmd->add_option("--n", tn, "right operand size")->required();
    table->require_subcommand(1);

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "recompute and check a known complexity value");
    std::string verify_what;
    verify->add_option("what", verify_what, "syntactic | atoms | revmagic | product | star")
        ->required();
    int vn = 0;
    verify->add_option("-n,--states", vn, "witness size (or max size for product/star)");
    int trials = 200;
    verify->add_option("--trials", trials, "trial count for product/star");
    std::uint64_t vseed = 0;
    verify->add_option("--seed", vseed, "seed for product/star");

    // export-dot -----------------------------------------------------------
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a DFA file");
    std::string dot_file, dot_out;
    dot->add_option("file", dot_file, "DFA file ('-' for stdin)")->required();
    dot->add_option("-o,--output", dot_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*witness) {
            std::optional<Dfa> d;
            if (family == "unary") d = bifix::unary_free(wn);
            else if (family == "ternary") d = bifix::ternary_witness(wn);
            else if (family == "ternary-dialect") d = bifix::ternary_dialect(wn);
            else if (family == "wstream") d = bifix::wstream_witness(wn);
            else if (family == "atoms") d = bifix::atom_witness(wn);
            else if (family == "revmagic") {
                if (alpha < 0) throw bifix::input_error("revmagic needs --alpha");
                d = bifix::revmagic(wn, alpha);
            } else if (family == "random") d = bifix::random_bifix_free(wn, letters, seed);
            else throw bifix::input_error("unknown witness family: " + family);
            write_output(bifix::serialize_dfa(*d), out_path);
            return 0;
        }

        if (*check) {
            Dfa d = load_dfa(check_file);
            const bool minimal = bifix::state_complexity(d) == d.state_count();
            const auto empty_state = bifix::find_empty_state(d);
            if (json) {
                nlohmann::ordered_json j;
                j["states"] = d.state_count();
                j["symbols"] = d.symbol_count();
                j["minimal"] = minimal;
                j["prefix_free"] = bifix::is_prefix_free(d);
                j["suffix_free"] = bifix::is_suffix_free(d);
                j["bifix_free"] = bifix::is_bifix_free(d);
                j["non_returning"] = bifix::is_non_returning(d);
                if (empty_state) j["empty_state"] = *empty_state;
                else j["empty_state"] = nullptr;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "states: " << d.state_count() << "\n"
                          << "symbols: " << d.symbol_count() << "\n"
                          << "minimal: " << bool_word(minimal) << "\n"
                          << "prefix-free: " << bool_word(bifix::is_prefix_free(d)) << "\n"
                          << "suffix-free: " << bool_word(bifix::is_suffix_free(d)) << "\n"
                          << "bifix-free: " << bool_word(bifix::is_bifix_free(d)) << "\n"
                          << "non-returning: " << bool_word(bifix::is_non_returning(d)) << "\n";
                if (empty_state) std::cout << "empty-state: " << *empty_state << "\n";
                else std::cout << "empty-state: none\n";
            }
            return 0;
        }

        if (*op) {
            const bool unary = (op_kind == "star" || op_kind == "reverse");
            if (unary && op_files.size() != 1)
                throw bifix::input_error(op_kind + " takes exactly one file");
            if (!unary && op_files.size() != 2)
                throw bifix::input_error(op_kind + " takes exactly two files");
            std::optional<Dfa> result;
            if (unary) {
                Dfa d = load_dfa(op_files[0]);
                result = (op_kind == "star") ? bifix::star(d, limits)
                                             : bifix::reverse(d, limits);
            } else {
                Dfa a = load_dfa(op_files[0]);
                Dfa b = load_dfa(op_files[1]);
                if (op_kind == "union")
                    result = bifix::boolean(a, b, bifix::BooleanOp::Union, limits);
                else if (op_kind == "inter")
                    result = bifix::boolean(a, b, bifix::BooleanOp::Intersection, limits);
                else if (op_kind == "diff")
                    result = bifix::boolean(a, b, bifix::BooleanOp::Difference, limits);
                else if (op_kind == "symdiff")
                    result = bifix::boolean(a, b, bifix::BooleanOp::SymmetricDifference, limits);
                else if (op_kind == "concat")
                    result = bifix::concat(a, b, limits);
                else
                    throw bifix::input_error("unknown operation: " + op_kind);
            }
            write_output(bifix::serialize_dfa(*result), op_out);
            return 0;
        }

        if (*semigroup) {
            Dfa d = bifix::minimize(load_dfa(sg_file));
            // type classification and the pair notions live in the
            // conventional layout (final n-2, dead n-1); relabel when the
            // minimal DFA has that shape
            if (d.state_count() >= 3 && d.finals().size() == 1 &&
                bifix::find_empty_state(d) && bifix::is_bifix_free(d)) {
                d = bifix::bifix_convention(d);
            }
            bifix::SemigroupClosure c =
                bifix::closure(bifix::letter_transformations(d), limits);
            long long counts[4] = {0, 0, 0, 0};
            for (const auto& t : c.elements())
                ++counts[static_cast<int>(bifix::classify_wbf(t))];
            auto colliding = bifix::colliding_pairs(c);
            auto focused = bifix::focused_pairs(c);

            if (json) {
                nlohmann::ordered_json j;
                j["generators"] = c.generator_count();
                j["size"] = c.size();
                if (sg_classify) {
                    j["type1"] = counts[1];
                    j["type2"] = counts[2];
                    j["type3"] = counts[3];
                    j["other"] = counts[0];
                    j["sub_wbf"] = (counts[0] == 0);
                }
                if (sg_pairs) {
                    auto render = [](const auto& pairs) {
                        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                        for (auto [p, q] : pairs) arr.push_back({p, q});
                        return arr;
                    };
                    j["colliding"] = render(colliding);
                    j["focused"] = render(focused);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "generators: " << c.generator_count() << "\n"
                          << "size: " << c.size() << "\n";
                if (sg_classify) {
                    std::cout << "type1: " << counts[1] << "\ntype2: " << counts[2]
                              << "\ntype3: " << counts[3] << "\nother: " << counts[0]
                              << "\nsub-wbf: " << bool_word(counts[0] == 0) << "\n";
                }
                if (sg_pairs) {
                    auto render = [](const char* label, const auto& pairs) {
                        std::cout << label << ":";
                        for (auto [p, q] : pairs) std::cout << " {" << p << "," << q << "}";
                        std::cout << "\n";
                    };
                    render("colliding", colliding);
                    render("focused", focused);
                }
            }
            return 0;
        }

        if (*atoms_cmd) {
            Dfa d = bifix::minimize(load_dfa(atoms_file));
            if (!bifix::is_bifix_free(d))
                throw bifix::input_error("atom analysis expects a bifix-free language");
            if (d.state_count() >= 3) d = bifix::bifix_convention(d);
            auto found = bifix::atoms(d, limits);
            const int n = d.state_count();
            const bool conventional =
                n >= 3 && d.finals() == std::vector<bifix::State>{n - 2} &&
                bifix::find_empty_state(d) == std::optional<bifix::State>(n - 1);

            if (json) {
                nlohmann::ordered_json j;
                j["atoms"] = found.size();
                nlohmann::ordered_json list = nlohmann::ordered_json::array();
                for (const auto& s : found) {
                    nlohmann::ordered_json entry;
                    entry["set"] = s;
                    entry["complexity"] = bifix::atom_complexity(d, s, limits);
                    if (conventional) entry["bound"] = bifix::atom_bound(n, s);
                    list.push_back(std::move(entry));
                }
                j["list"] = std::move(list);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "atoms: " << found.size() << "\n";
                for (const auto& s : found) {
                    std::cout << "{";
                    for (std::size_t i = 0; i < s.size(); ++i)
                        std::cout << (i ? "," : "") << s[i];
                    std::cout << "} complexity=" << bifix::atom_complexity(d, s, limits);
                    if (conventional) std::cout << " bound=" << bifix::atom_bound(n, s);
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*dialect_cmd) {
            Dfa d = load_dfa(dialect_file);
            write_output(bifix::serialize_dfa(bifix::dialect(d, parse_map_flag(map_spec))),
                         dialect_out);
            return 0;
        }

        if (*table) return emit_report(bifix::table_ops(tm, tn, limits), json);

        if (*verify) {
            if (verify_what == "syntactic")
                return emit_report(bifix::verify_syntactic(vn ? vn : 6, limits), json);
            if (verify_what == "atoms")
                return emit_report(bifix::verify_atoms(vn ? vn : 6, limits), json);
            if (verify_what == "revmagic")
                return emit_report(bifix::verify_revmagic(vn ? vn : 6, limits), json);
            if (verify_what == "product")
                return emit_report(bifix::verify_product(vn ? vn : 8, trials, vseed, limits), json);
            if (verify_what == "star")
                return emit_report(bifix::verify_star(vn ? vn : 8, trials, vseed, limits), json);
            throw bifix::input_error("unknown verification: " + verify_what);
        }

        if (*dot) {
            write_output(bifix::export_dot(load_dfa(dot_file)), dot_out);
            return 0;
        }
    } catch (const bifix::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const bifix::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
