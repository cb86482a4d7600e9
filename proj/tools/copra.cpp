// copra: a workbench for finite binary relational structures, their posets
// of isomorphic copies, separative quotients, ordinal arithmetic in Cantor
// normal form, and the classification of finitely presented countable
// structures into the A1..D5 diagram.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copra/classifier.hpp"
#include "copra/copy_analysis.hpp"
#include "copra/embedding.hpp"
#include "copra/errors.hpp"
#include "copra/forcing_term.hpp"
#include "copra/generate.hpp"
#include "copra/ordinal.hpp"
#include "copra/poset.hpp"
#include "copra/structure.hpp"
#include "copra/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    bool as_json = false;
    bool ch_mode = false;
    long long cap_nodes = 10'000'000;
    int cap_size = 0;  // 0 = per-operation defaults
    std::uint64_t seed = 0;

    copra::SearchLimits limits() const { return {cap_nodes}; }
    int size_cap(int fallback) const { return cap_size > 0 ? cap_size : fallback; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw copra::input_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

copra::FiniteBinaryStructure load_structure(const std::string& path) {
    return copra::FiniteBinaryStructure::from_json_string(read_file(path));
}

copra::FinitePoset load_poset(const std::string& path) {
    return copra::FinitePoset::from_json_string(read_file(path));
}

std::vector<int> parse_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw copra::input_error("bad element '" + tok + "' in set argument");
        }
    }
    return out;
}

void emit(const GlobalOptions& opt, const json& machine, const std::string& human) {
    if (opt.as_json)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human << "\n";
}

json structure_json(const copra::FiniteBinaryStructure& s) {
    return json::parse(s.to_json_string());
}

json poset_json(const copra::FinitePoset& p) {
    return json::parse(p.to_json_string());
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

// ----------------------------------------------------------------- commands

void cmd_components(const GlobalOptions& opt, const std::string& file) {
    copra::Partition part = copra::components(load_structure(file));
    json j{{"blocks", part.blocks}};
    std::string human = "components: " + std::to_string(part.blocks.size());
    for (const auto& b : part.blocks)
        human += "\n  {" + join_ints(b, ", ") + "}";
    emit(opt, j, human);
}

void cmd_complement(const GlobalOptions& opt, const std::string& file) {
    copra::FiniteBinaryStructure c = copra::complement(load_structure(file));
    emit(opt, structure_json(c), c.to_json_string());
}

void cmd_induced(const GlobalOptions& opt, const std::string& file, const std::string& set) {
    copra::FiniteBinaryStructure s = copra::induced(load_structure(file), parse_set(set));
    emit(opt, structure_json(s), s.to_json_string());
}

void cmd_iso(const GlobalOptions& opt, const std::string& f1, const std::string& f2) {
    auto witness = copra::find_isomorphism(load_structure(f1), load_structure(f2),
                                           opt.size_cap(copra::kDefaultIsoSizeCap));
    if (witness)
        emit(opt, json{{"isomorphic", true}, {"witness", *witness}},
             "isomorphic via " + join_ints(*witness));
    else
        emit(opt, json{{"isomorphic", false}}, "not isomorphic");
}

void cmd_embed(const GlobalOptions& opt, const std::string& pf, const std::string& hf) {
    auto embs = copra::embeddings(load_structure(pf), load_structure(hf), opt.limits());
    json j{{"count", embs.size()}, {"embeddings", embs}};
    std::string human = "embeddings: " + std::to_string(embs.size());
    for (const auto& e : embs)
        human += "\n  [" + join_ints(e, ", ") + "]";
    emit(opt, j, human);
}

void print_copies(const GlobalOptions& opt, const copra::CopySet& cs) {
    json j{{"count", cs.copies.size()}, {"copies", cs.copies}};
    std::string human = "copies: " + std::to_string(cs.copies.size());
    for (const auto& c : cs.copies)
        human += "\n  {" + join_ints(c, ", ") + "}";
    emit(opt, j, human);
}

void cmd_copies(const GlobalOptions& opt, const std::string& pf, const std::string& hf) {
    print_copies(opt, copra::copies(load_structure(pf), load_structure(hf), opt.limits()));
}

void cmd_copies_oracle(const GlobalOptions& opt, const std::vector<std::string>& part_files,
                       const std::vector<std::string>& host_files) {
    std::vector<copra::FiniteBinaryStructure> parts, hosts;
    for (const auto& f : part_files)
        parts.push_back(load_structure(f));
    for (const auto& f : host_files)
        hosts.push_back(load_structure(f));
    print_copies(opt, copra::copies_of_union_oracle(parts, hosts, opt.limits()));
}

void cmd_poset(const GlobalOptions& opt, const std::string& pf, const std::string& hf) {
    copra::CopyPoset cp =
        copra::poset_of_copies(load_structure(pf), load_structure(hf), opt.limits(),
                               opt.size_cap(copra::kDefaultCopyPosetCap));
    json j{{"poset", poset_json(cp.poset)}, {"labels", cp.labels}};
    std::string human = "poset of copies on " + std::to_string(cp.poset.size()) +
                        " elements\n" + cp.poset.to_json_string();
    emit(opt, j, human);
}

void cmd_sq(const GlobalOptions& opt, const std::string& file) {
    copra::SeparativeQuotient sq = copra::separative_quotient(load_poset(file));
    json j{{"quotient", poset_json(sq.quotient)}, {"class-of", sq.class_of}};
    emit(opt, j,
         "separative quotient has " + std::to_string(sq.quotient.size()) +
             " classes\nclass of each element: [" + join_ints(sq.class_of, ", ") + "]\n" +
             sq.quotient.to_json_string());
}

void cmd_density(const GlobalOptions& opt, const std::string& file, const std::string& set) {
    copra::FinitePoset p = load_poset(file);
    std::vector<int> subset = parse_set(set);
    copra::DensityMode mode = copra::density_mode(p, subset);
    const char* name = mode == copra::DensityMode::Dense          ? "dense"
                       : mode == copra::DensityMode::SomewhereDense ? "somewhere-dense"
                                                                    : "nowhere-dense";
    emit(opt, json{{"density", name}}, name);
}

void cmd_indivisible(const GlobalOptions& opt, const std::string& pf, const std::string& hf) {
    bool ind = copra::pattern_indivisible(load_structure(pf), load_structure(hf), opt.limits());
    emit(opt, json{{"indivisible", ind}}, ind ? "indivisible" : "divisible");
}

void cmd_ideal(const GlobalOptions& opt, const std::string& pf, const std::string& hf) {
    copra::IdealSets ideal =
        copra::avoider_sets(load_structure(pf), load_structure(hf), opt.limits());
    bool ok = copra::is_ideal_finite(ideal);
    json j{{"ideal", ok}, {"avoider-count", ideal.avoider_masks.size()}};
    // the full family only when it stays readable
    if (ideal.avoider_masks.size() <= 512)
        j["avoiders"] = ideal.avoiders();
    emit(opt, j,
         std::string(ok ? "ideal" : "not an ideal") + " (" +
             std::to_string(ideal.avoider_masks.size()) + " avoiding subsets)");
}

void cmd_ramsey(const GlobalOptions& opt, const std::string& file, int k) {
    copra::RamseyColoring col = copra::ramsey_coloring(load_structure(file));
    json triples = json::array();
    std::string human = "pair coloring:";
    for (int y = 0; y < col.domain_size; ++y)
        for (int x = 0; x < y; ++x) {
            const char* name = copra::ramsey_color_name(col.color(x, y));
            triples.push_back({x, y, name});
            human += "\n  {" + std::to_string(x) + "," + std::to_string(y) + "} " + name;
        }
    json j{{"size", col.domain_size}, {"coloring", triples}};
    if (k > 0) {
        auto h = copra::homogeneous_subset(col, k);
        if (h) {
            j["homogeneous"] = {{"set", h->elements},
                                {"color", copra::ramsey_color_name(h->color)}};
            human += "\nhomogeneous " + std::to_string(k) + "-set: {" +
                     join_ints(h->elements, ", ") + "} in " +
                     copra::ramsey_color_name(h->color);
        } else {
            j["homogeneous"] = nullptr;
            human += "\nno homogeneous " + std::to_string(k) + "-set";
        }
    }
    emit(opt, j, human);
}

void cmd_maximal_check(const GlobalOptions& opt, const std::string& family, int n) {
    auto f = copra::maximal_family_from_name(family);
    if (!f)
        throw copra::input_error("unknown maximal family '" + family + "'");
    bool ok = copra::maximal_prefix_check(*f, n);
    emit(opt, json{{"family", family}, {"n", n}, {"hereditary", ok}},
         ok ? "prefix-hereditary" : "not prefix-hereditary");
}

void cmd_ordinal(const GlobalOptions& opt, const std::string& expr) {
    copra::OrdinalCNF a = copra::parse_ordinal(expr);
    json j{{"canonical", copra::render_ordinal(a)},
           {"finite", a.is_finite()},
           {"limit", a.is_limit()}};
    std::string human = "canonical form: " + copra::render_ordinal(a);
    if (!a.is_zero()) {
        bool ind = copra::is_indivisible_ordinal(a);
        j["indivisible"] = ind;
        human += ind ? "\nindivisible (a power of w)" : "\ndivisible";
    }
    emit(opt, j, human);
}

void cmd_sq_formula(const GlobalOptions& opt, const std::string& expr) {
    copra::OrdinalCNF a = copra::parse_ordinal(expr);
    copra::ForcingTerm term = copra::sq_formula(a);
    emit(opt,
         json{{"ordinal", copra::render_ordinal(a)}, {"term", copra::render_term(term)}},
         copra::render_term(term));
}

void cmd_classify(const GlobalOptions& opt, const std::string& descriptor) {
    copra::Classification c =
        copra::classify(copra::parse_descriptor(descriptor), opt.ch_mode);
    if (opt.as_json) {
        std::cout << copra::classification_to_json_string(c) << "\n";
        return;
    }
    std::cout << "cell: " << c.cell.name() << "\n"
              << "term: " << copra::render_term(c.term) << "\n"
              << "attributes: copies=" << copra::to_string(c.attributes.copies_cardinality)
              << " divisible=" << (c.attributes.divisible ? "yes" : "no")
              << " ideal=" << copra::to_string(c.attributes.ideal_status)
              << " density=" << copra::to_string(c.attributes.copies_density)
              << " sq-size=" << copra::to_string(c.attributes.sq_size)
              << " sq-kind=" << copra::to_string(c.attributes.sq_kind) << "\n";
    std::cout << "citations:";
    for (const auto& cit : c.citations)
        std::cout << " " << cit;
    std::cout << "\n";
}

int cmd_verify(const GlobalOptions& opt, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all")
        names = copra::verification_suite_names();
    else
        names.push_back(suite);

    copra::SuiteOptions sopt;
    sopt.seed = opt.seed;
    sopt.limits = opt.limits();

    int total_failed = 0;
    json report = json::array();
    for (const auto& name : names) {
        copra::SuiteResult r = copra::run_verification_suite(name, sopt);
        total_failed += r.failed;
        if (opt.as_json) {
            report.push_back({{"suite", r.name},
                              {"passed", r.passed},
                              {"failed", r.failed},
                              {"failures", r.failures}});
        } else {
            std::cout << "suite " << r.name << ": " << r.passed << " passed, " << r.failed
                      << " failed\n";
            for (const auto& f : r.failures)
                std::cout << "    violated: " << f << "\n";
        }
    }
    if (opt.as_json)
        std::cout << report.dump() << "\n";
    return total_failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for posets of copies of binary relational structures"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_flag("--json", opt.as_json, "emit canonical JSON");
    app.add_flag("--ch", opt.ch_mode, "assume CH: collapse sigma-closed atomless terms");
    app.add_option("--cap-nodes", opt.cap_nodes, "backtracking node budget");
    app.add_option("--cap-size", opt.cap_size, "size cap for searches and products");
    app.add_option("--seed", opt.seed, "seed for randomized verification suites");

    std::string file1, file2, set_arg, expr, family;
    std::vector<std::string> part_files, host_files;
    int k_arg = 0, n_arg = 1;

    auto* components = app.add_subcommand("components", "connected components of a structure");
    components->add_option("file", file1)->required();
    auto* complement = app.add_subcommand("complement", "complement relation");
    complement->add_option("file", file1)->required();
    auto* induced = app.add_subcommand("induced", "induced substructure on a subset");
    induced->add_option("file", file1)->required();
    induced->add_option("--set", set_arg, "comma-separated elements")->required();
    auto* iso = app.add_subcommand("iso", "isomorphism witness between two structures");
    iso->add_option("first", file1)->required();
    iso->add_option("second", file2)->required();
    auto* embed = app.add_subcommand("embed", "enumerate embeddings of pattern into host");
    embed->add_option("pattern", file1)->required();
    embed->add_option("host", file2)->required();
    auto* copies = app.add_subcommand("copies", "enumerate copies of pattern inside host");
    copies->add_option("pattern", file1)->required();
    copies->add_option("host", file2)->required();
    auto* oracle =
        app.add_subcommand("copies-oracle", "component-wise copies of a disjoint union");
    oracle->add_option("--part", part_files, "connected pattern part (repeatable)")->required();
    oracle->add_option("--host-part", host_files, "connected host part (repeatable)")
        ->required();
    auto* poset = app.add_subcommand("poset", "poset of copies ordered by inclusion");
    poset->add_option("pattern", file1)->required();
    poset->add_option("host", file2)->required();
    auto* sq = app.add_subcommand("sq", "separative quotient of a finite poset");
    sq->add_option("poset", file1)->required();
    auto* density = app.add_subcommand("density", "density mode of a subset in a poset");
    density->add_option("poset", file1)->required();
    density->add_option("--set", set_arg, "comma-separated elements")->required();
    auto* indivisible =
        app.add_subcommand("indivisible", "2-partition indivisibility of pattern in host");
    indivisible->add_option("pattern", file1)->required();
    indivisible->add_option("host", file2)->required();
    auto* ideal = app.add_subcommand("ideal", "do the copy-avoiding sets form an ideal");
    ideal->add_option("pattern", file1)->required();
    ideal->add_option("host", file2)->required();
    auto* ramsey = app.add_subcommand("ramsey", "four-way pair coloring of a structure");
    ramsey->add_option("file", file1)->required();
    ramsey->add_option("--k", k_arg, "also search a homogeneous subset of this size");
    auto* maximal = app.add_subcommand("maximal-check", "prefix-hereditary check of a family");
    maximal->add_option("family", family, "empty|complete|lt|gt|diag|full|le|ge")->required();
    maximal->add_option("n", n_arg, "prefix size")->required();
    auto* ordinal = app.add_subcommand("ordinal", "normalize an ordinal expression");
    ordinal->add_option("expr", expr)->required();
    auto* sqf = app.add_subcommand("sq-formula", "separative quotient of an ordinal's copies");
    sqf->add_option("expr", expr)->required();
    auto* classify = app.add_subcommand("classify", "classify a descriptor into the diagram");
    classify->add_option("descriptor", expr)->required();
    auto* verify = app.add_subcommand("verify", "run a named verification suite (or 'all')");
    verify->add_option("suite", family)->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (components->parsed())
            cmd_components(opt, file1);
        else if (complement->parsed())
            cmd_complement(opt, file1);
        else if (induced->parsed())
            cmd_induced(opt, file1, set_arg);
        else if (iso->parsed())
            cmd_iso(opt, file1, file2);
        else if (embed->parsed())
            cmd_embed(opt, file1, file2);
        else if (copies->parsed())
            cmd_copies(opt, file1, file2);
        else if (oracle->parsed())
            cmd_copies_oracle(opt, part_files, host_files);
        else if (poset->parsed())
            cmd_poset(opt, file1, file2);
        else if (sq->parsed())
            cmd_sq(opt, file1);
        else if (density->parsed())
            cmd_density(opt, file1, set_arg);
        else if (indivisible->parsed())
            cmd_indivisible(opt, file1, file2);
        else if (ideal->parsed())
            cmd_ideal(opt, file1, file2);
        else if (ramsey->parsed())
            cmd_ramsey(opt, file1, k_arg);
        else if (maximal->parsed())
            cmd_maximal_check(opt, family, n_arg);
        else if (ordinal->parsed())
            cmd_ordinal(opt, expr);
        else if (sqf->parsed())
            cmd_sq_formula(opt, expr);
        else if (classify->parsed())
            cmd_classify(opt, expr);
        else if (verify->parsed())
            return cmd_verify(opt, family);
    } catch (const copra::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const copra::parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 3;
    } catch (const copra::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
