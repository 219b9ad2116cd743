#include "rotsys/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <sstream>

#include "rotsys/audit.hpp"
#include "rotsys/colorlab.hpp"
#include "rotsys/detect.hpp"
#include "rotsys/discharge.hpp"
#include "rotsys/faces.hpp"
#include "rotsys/families.hpp"
#include "rotsys/reducer.hpp"
#include "rotsys/rot_format.hpp"

namespace rotsys {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Report {
    std::ostringstream text;
    std::vector<std::pair<std::string, std::string>> machine;

    void kv(const std::string& key, const std::string& value) { machine.emplace_back(key, value); }
    std::string str() {
        std::string out = text.str();
        if (!machine.empty()) {
            out += "---\n";
            for (const auto& [k, v] : machine) out += k + "=" + v + "\n";
        }
        return out;
    }
};

int cmd_analyze(const std::string& file, CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    const FaceSet faces = trace_faces(g);
    Report rep;
    rep.text << "vertices: " << g.vertex_count() << "\n";
    rep.text << "edges: " << g.edge_count() << "\n";
    rep.text << "faces: " << faces.face_count() << "\n";
    int chi = g.vertex_count() - g.edge_count() + faces.face_count();
    rep.text << "euler-characteristic: " << chi << "\n";
    if (g.connected()) {
        const EmbeddingSummary s = summarize_embedding(g);
        rep.text << "genus: " << (s.genus ? std::to_string(*s.genus) : "undefined") << "\n";
    } else {
        rep.text << "genus: undefined (disconnected)\n";
    }
    std::map<int, int> hist;
    for (int v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
    rep.text << "degree-histogram:";
    for (auto [d, count] : hist) rep.text << " " << d << ":" << count;
    rep.text << "\n";
    std::map<int, int> fhist;
    for (int f = 0; f < faces.face_count(); ++f) ++fhist[faces.degree(f)];
    rep.text << "face-degree-histogram:";
    for (auto [d, count] : fhist) rep.text << " " << d << ":" << count;
    rep.text << "\n";

    rep.kv("vertices", std::to_string(g.vertex_count()));
    rep.kv("edges", std::to_string(g.edge_count()));
    rep.kv("faces", std::to_string(faces.face_count()));
    rep.kv("euler_characteristic", std::to_string(chi));
    result.report = rep.str();
    return 0;
}

int cmd_detect(const std::string& file, const std::string& pattern, const SearchBudget& budget,
               CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    Report rep;
    std::optional<std::vector<std::string>> witness;
    if (pattern == "k5" || pattern == "k5minus" || pattern == "w4") {
        const Pattern which = pattern == "k5"        ? Pattern::K5
                              : pattern == "k5minus" ? Pattern::K5Minus
                                                     : Pattern::W4;
        if (auto hit = find_k5_variant(g, which)) witness = hit->witness;
    } else if (pattern.rfind("cycle:", 0) == 0) {
        const std::string len_text = pattern.substr(6);
        if (len_text.empty() || len_text.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("cycle length must be a positive integer, got '" + len_text + "'");
        const int len = std::stoi(len_text);
        if (auto hit = has_cycle_of_length(g, len, budget)) witness = hit->witness;
    } else if (pattern == "hamiltonian") {
        witness = find_hamiltonian_cycle(g, budget);
    } else {
        throw CLI::ValidationError("--pattern",
                                   "expected k5|k5minus|w4|cycle:L|hamiltonian, got " + pattern);
    }
    rep.text << "pattern: " << pattern << "\n";
    if (witness) {
        rep.text << "found:";
        for (const auto& id : *witness) rep.text << " " << id;
        rep.text << "\n";
        rep.kv("found", "true");
    } else {
        rep.text << "found: none\n";
        rep.kv("found", "false");
    }
    result.report = rep.str();
    return witness ? 0 : 1;
}

int cmd_color(const std::string& file, bool chromatic, const std::string& lists_file,
              int choosable_k, const SearchBudget& budget, CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    Report rep;
    int code = 0;
    if (chromatic) {
        const int chi = chromatic_number(g, budget);
        rep.text << "chromatic-number: " << chi << "\n";
        rep.kv("chromatic_number", std::to_string(chi));
    } else if (!lists_file.empty()) {
        const ListAssignment L = parse_list_assignment(read_file(lists_file), g);
        if (auto col = solve_list_coloring(g, L)) {
            rep.text << "list-colorable: yes\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                rep.text << "  " << g.id(v) << " -> " << col->color[v] << "\n";
            rep.kv("list_colorable", "true");
        } else {
            rep.text << "list-colorable: no\n";
            rep.kv("list_colorable", "false");
            code = 1;
        }
    } else {
        std::vector<int> sizes(g.vertex_count(), choosable_k);
        const ChoosabilityResult r = is_f_choosable(g, sizes, budget);
        rep.text << choosable_k << "-choosable: " << (r.choosable ? "yes" : "no") << "\n";
        if (!r.choosable) {
            rep.text << "bad assignment:\n";
            for (int v = 0; v < g.vertex_count(); ++v) {
                rep.text << "  " << g.id(v) << ":";
                for (int color : r.witness->lists[v]) rep.text << " " << color;
                rep.text << "\n";
            }
            code = 1;
        }
        rep.kv("choosable", r.choosable ? "true" : "false");
        rep.kv("assignments_checked", std::to_string(r.assignments_checked));
    }
    result.report = rep.str();
    return code;
}

int cmd_reduce(const std::string& file, const SearchBudget& budget, CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    const auto hits = find_reducible(g, budget);
    Report rep;
    rep.text << "reducible-hits: " << hits.size() << "\n";
    for (const auto& hit : hits) {
        rep.text << "  " << reducible_kind_name(hit.kind) << ":";
        for (const auto& id : hit.vertex_set) rep.text << " " << id;
        rep.text << "\n";
    }
    rep.kv("hits", std::to_string(hits.size()));
    result.report = rep.str();
    return hits.empty() ? 0 : 1;
}

int cmd_discharge(const std::string& file, bool trace, const SearchBudget& budget,
                  CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    const DischargeReport rpt = verify_discharge(g, budget);
    Report rep;
    rep.text << "hypotheses: k5minus-free=" << (rpt.k5minus_free ? "yes" : "no")
             << " 6cycle-free=" << (rpt.six_cycle_free ? "yes" : "no")
             << " min-degree-4=" << (rpt.min_degree_4 ? "yes" : "no")
             << " genus<=1=" << (rpt.genus_at_most_1 ? "yes" : "no") << "\n";
    rep.text << "reducible-configurations: " << rpt.reducible_hits.size() << "\n";
    rep.text << "initial-total: " << to_string(rpt.initial_total) << "\n";
    rep.text << "final-total: " << to_string(rpt.final_total) << "\n";
    rep.text << "conservation: " << (rpt.conservation_exact ? "PASS" : "FAIL") << "\n";
    rep.text << "initial-matches-6E-6V-6F: "
             << (rpt.initial_total_matches_euler_form ? "PASS" : "FAIL") << "\n";
    if (trace)
        for (const Transfer& t : rpt.ledger.transfers)
            rep.text << "RULE " << t.rule << " " << element_name(g, t.source) << " -> "
                     << element_name(g, t.target) << " " << to_string(t.amount) << "\n";
    rep.text << "negative-final-elements: " << rpt.negative_final.size() << "\n";
    for (const auto& [name, value] : rpt.negative_final)
        rep.text << "  " << name << " " << to_string(value) << "\n";
    bool any_fail = false;
    for (const CheckOutcome& check : rpt.checklist) {
        rep.text << "CLAIM " << check.id << " " << verdict_name(check.verdict);
        if (!check.witness.empty()) rep.text << " " << check.witness;
        rep.text << "\n";
        any_fail |= check.verdict == Verdict::Fail;
    }
    rep.kv("conservation", rpt.conservation_exact ? "PASS" : "FAIL");
    rep.kv("initial_total", to_string(rpt.initial_total));
    rep.kv("final_total", to_string(rpt.final_total));
    rep.kv("transfers", std::to_string(rpt.ledger.transfers.size()));
    result.report = rep.str();
    return any_fail || !rpt.conservation_exact ? 1 : 0;
}

int cmd_audit(const std::string& file, const SearchBudget& budget, CommandResult& result) {
    const RotationGraph g = parse_rotation_graph(read_file(file));
    const AuditReport rpt = run_audit(g, budget);
    Report rep;
    bool any_fail = false;
    for (const AuditCheckResult& check : rpt.checks) {
        rep.text << "CHECK " << check.id << " " << verdict_name(check.verdict);
        if (!check.witness.empty()) rep.text << " " << check.witness;
        rep.text << "\n";
        any_fail |= check.verdict == Verdict::Fail;
    }
    rep.kv("hypotheses_hold", rpt.hypotheses_hold() ? "true" : "false");
    result.report = rep.str();
    return any_fail ? 1 : 0;
}

int cmd_gen(const std::string& family, int s, const std::string& out_file, bool certify,
            CommandResult& result) {
    FamilySpec spec{family == "gs" ? Family::GS : Family::GPrime, s};
    const RotationGraph g = spec.family == Family::GS ? generate_gs(s) : generate_gprime(s);
    Report rep;
    if (!out_file.empty()) {
        save_rotation_graph(g, out_file);
        rep.text << "wrote " << out_file << " (" << g.vertex_count() << " vertices, "
                 << g.edge_count() << " edges)\n";
    } else {
        rep.text << serialize_rotation_graph(g);
    }
    int code = 0;
    if (certify) {
        try {
            const FamilyCertificate cert = certify_family(g, spec);
            for (const auto& item : cert.items)
                rep.text << "CERT " << item.name << " " << (item.passed ? "PASS" : "FAIL")
                         << (item.detail.empty() ? "" : " " + item.detail) << "\n";
        } catch (const CertificationError& e) {
            rep.text << e.what() << "\n";
            code = 1;
        }
    }
    result.report = rep.str();
    return code;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
    CommandResult result;

    CLI::App app{"embedded-graph engine: rotation systems, exact coloring, discharging"};
    app.require_subcommand(1);

    SearchBudget budget;
    std::uint64_t max_steps = budget.max_steps;
    int max_nodes = 0;
    app.add_option("--max-steps", max_steps, "search step budget (default 200000000)");
    app.add_option("--max-nodes", max_nodes,
                   "vertex-count cap for exact searches (default: 9 for choosability, 64 for "
                   "chromatic number)");

    std::string file, pattern, lists_file, out_file, family;
    bool chromatic = false, trace = false, certify = false;
    int choosable_k = 0, s_param = 0;

    auto* analyze = app.add_subcommand("analyze", "embedding summary of a .rot file");
    analyze->add_option("file", file)->required();

    auto* detect = app.add_subcommand("detect", "search for a pattern");
    detect->add_option("file", file)->required();
    detect->add_option("--pattern", pattern, "k5|k5minus|w4|cycle:L|hamiltonian")->required();

    auto* color = app.add_subcommand("color", "exact coloring queries");
    color->add_option("file", file)->required();
    auto* opt_chrom = color->add_flag("--chromatic", chromatic, "chromatic number");
    auto* opt_lists = color->add_option("--lists", lists_file, "list assignment file");
    auto* opt_choos = color->add_option("--choosable", choosable_k, "uniform list size k");
    opt_chrom->excludes(opt_lists)->excludes(opt_choos);
    opt_lists->excludes(opt_choos);

    auto* reduce = app.add_subcommand("reduce", "find reducible configurations");
    reduce->add_option("file", file)->required();

    auto* discharge = app.add_subcommand("discharge", "run the charge system");
    discharge->add_option("file", file)->required();
    discharge->add_flag("--trace", trace, "log every transfer");

    auto* audit = app.add_subcommand("audit", "run the structural checks");
    audit->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generate a family member");
    gen->add_option("family", family, "gs|gprime")->required()
        ->check(CLI::IsMember({"gs", "gprime"}));
    gen->add_option("s", s_param, "family parameter")->required();
    gen->add_option("-o,--output", out_file, "write .rot here instead of stdout");
    gen->add_flag("--certify", certify, "verify the family certificates");

    try {
        // CLI11 consumes the vector form back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        if (e.get_exit_code() == 0) {
            // --help
            os << app.help();
            result.report = os.str();
            result.exit_code = 0;
            return result;
        }
        os << "error: " << e.what() << "\n" << app.help();
        result.report = os.str();
        result.exit_code = 2;
        return result;
    }

    budget.max_steps = max_steps;
    budget.max_vertices = max_nodes;

    try {
        if (analyze->parsed()) result.exit_code = cmd_analyze(file, result);
        else if (detect->parsed()) result.exit_code = cmd_detect(file, pattern, budget, result);
        else if (color->parsed()) {
            if (!chromatic && lists_file.empty() && choosable_k == 0)
                throw ValidationError("color: one of --chromatic, --lists, --choosable required");
            result.exit_code = cmd_color(file, chromatic, lists_file, choosable_k, budget, result);
        } else if (reduce->parsed()) result.exit_code = cmd_reduce(file, budget, result);
        else if (discharge->parsed()) result.exit_code = cmd_discharge(file, trace, budget, result);
        else if (audit->parsed()) result.exit_code = cmd_audit(file, budget, result);
        else if (gen->parsed()) result.exit_code = cmd_gen(family, s_param, out_file, certify, result);
    } catch (const BudgetExceeded& e) {
        result.report += std::string("budget exceeded: ") + e.what() + "\n";
        result.exit_code = 3;
    } catch (const CLI::Error& e) {
        result.report += std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const ValidationError& e) {
        result.report += std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    }
    return result;
}

}  // namespace rotsys
