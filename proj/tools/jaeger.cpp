// jaeger: compute, expand and verify link polynomials from the command line.
//
// Exit status: 0 success, 1 a verification failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jaeger/bundled.hpp"

namespace {

using namespace jaeger;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

struct Input {
    std::string pd_file, pd_text, braid, name, corpus_file;

    void add_to(CLI::App* app) {
        auto* g = app->add_option_group("input");
        g->add_option("--pd", pd_file, "file holding PD text ('-' for stdin)");
        g->add_option("--pd-text", pd_text, "PD text given inline");
        g->add_option("--braid", braid, "braid, e.g. 'BR 2 : 1 1 1'");
        g->add_option("--name", name, "entry of the corpus");
        g->require_option(1);
        app->add_option("--corpus", corpus_file, "corpus file used by --name (default: bundled)");
    }

    [[nodiscard]] std::vector<CorpusEntry> corpus() const {
        if (corpus_file.empty()) return bundled_corpus();
        return parse_corpus(read_file(corpus_file));
    }

    [[nodiscard]] std::string label() const {
        if (!name.empty()) return name;
        if (!braid.empty()) return braid;
        if (!pd_file.empty()) return pd_file;
        return "pd";
    }

    [[nodiscard]] LinkDiagram diagram() const {
        if (!pd_file.empty()) return LinkDiagram::parse_pd(read_file(pd_file));
        if (!pd_text.empty()) return LinkDiagram::parse_pd(pd_text);
        if (!braid.empty()) return from_braid_word(parse_braid(braid));
        const auto all = corpus();
        const CorpusEntry* e = find_entry(all, name);
        if (!e) throw InputError("no corpus entry named '" + name + "'");
        return e->diagram();
    }
};

unsigned default_jobs() {
    if (const char* env = std::getenv("JAEGER_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j > 0) return static_cast<unsigned>(j);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

nlohmann::json value_json(const RationalFunction& r) {
    nlohmann::json j = r.to_json();
    j["text"] = r.to_string();
    return j;
}

Family family_from(const std::string& s) { return s == "bn" ? Family::Bn : Family::Dn; }

std::string family_name(Family f) { return f == Family::Dn ? "dn" : "bn"; }

// --- compute -------------------------------------------------------------------

struct ComputeArgs {
    std::string invariant;
    Input input;
    std::optional<int> specialize;
    std::string format = "text";
};

int run_compute(const ComputeArgs& a) {
    const LinkDiagram d = a.input.diagram();
    RationalFunction v = a.invariant == "homfly" ? evaluate_homfly(OrientedLinkDiagram::from_pd(d)) : evaluate_kauffman(d);
    if (a.specialize) v = v.substitute_a(*a.specialize);
    if (a.format == "json") {
        nlohmann::json j{{"invariant", a.invariant}, {"input", a.input.label()}, {"value", value_json(v)}};
        if (a.specialize) j["specialize"] = *a.specialize;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << v.to_string() << '\n';
    }
    return kOk;
}

// --- expand --------------------------------------------------------------------

struct ExpandArgs {
    Input input;
    std::string family = "dn";
    std::string table_file;
    bool states = false;
    std::string format = "text";
    unsigned jobs = 1;
};

RuleTable table_for(const std::string& family, const std::string& file) {
    if (file.empty()) return default_rule_table(family_from(family));
    try {
        return rule_table_from_json(nlohmann::json::parse(read_file(file)));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("rule table: ") + e.what());
    }
}

std::string choice_text(const ExpansionState& s, const RuleTable& t) {
    std::string out;
    for (int k : s.choice) out += (out.empty() ? "" : ",") + t.crossing_rule[k].picture.name;
    for (int k : s.loop_choice) out += (out.empty() ? "" : ",") + std::string("loop:") + to_string(t.loop_rule[k].state);
    return out.empty() ? "-" : out;
}

int run_expand(const ExpandArgs& a) {
    const LinkDiagram d = a.input.diagram();
    const RuleTable t = table_for(a.family, a.table_file);
    if (auto problems = table_problems(t); !problems.empty() && !a.table_file.empty())
        for (const auto& p : problems) std::cerr << "warning: " << p << '\n';
    const auto result = expand_detailed(d, t, {a.jobs});
    nlohmann::json rows = nlohmann::json::array();
    if (a.states) {
        const StateEvaluator ev(d, t);
        std::size_t i = 0;
        for (const auto& s : enumerate_states(d, t)) {
            const int rot = ev.rotation(s);
            const RationalFunction val = ev.value(s);
            if (a.format == "json") {
                rows.push_back({{"choice", choice_text(s, t)},
                                {"weight", s.weight.to_string()},
                                {"rot", rot},
                                {"value", value_json(val)}});
            } else {
                std::cout << "state " << ++i << ": " << choice_text(s, t) << "  weight=" << s.weight.to_string()
                          << "  rot=" << rot << "  value=" << val.to_string() << '\n';
            }
        }
    }
    if (a.format == "json") {
        nlohmann::json j{{"input", a.input.label()},
                         {"family", family_name(t.family)},
                         {"states", result.states},
                         {"value", value_json(result.value)}};
        if (a.states) j["rows"] = rows;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (a.states ? "sum: " : "") << result.value.to_string() << '\n';
    }
    return kOk;
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
    Input input;
    bool all = false;
    std::string family = "dn";
    std::string table_file;
    std::string report;
    std::string report_format = "text";
    unsigned jobs = 1;
};

struct VerifyRow {
    std::string name;
    IdentityReport rep;
    [[nodiscard]] bool passed() const {
        if (rep.family == Family::Dn) return rep.equal;
        return std::all_of(rep.specialized.begin(), rep.specialized.end(), [](const auto& s) { return s.equal; });
    }
    [[nodiscard]] std::string line() const {
        std::ostringstream os;
        os << (passed() ? "PASS " : "FAIL ") << name << "  family=" << family_name(rep.family) << "  states=" << rep.states
           << "  time=" << std::fixed << std::setprecision(3) << rep.seconds << "s";
        if (rep.family == Family::Bn) {
            os << "  two-variable=" << (rep.equal ? "equal" : "differs");
            for (const auto& s : rep.specialized) os << "  n=" << s.n << ':' << (s.equal ? "ok" : "differs");
        }
        return os.str();
    }
    [[nodiscard]] nlohmann::json json() const {
        nlohmann::json j{{"name", name},
                         {"family", family_name(rep.family)},
                         {"pass", passed()},
                         {"states", rep.states},
                         {"seconds", rep.seconds},
                         {"expanded", rep.expanded.to_string()},
                         {"target", rep.target.to_string()},
                         {"equal", rep.equal}};
        if (rep.family == Family::Bn) {
            auto sp = nlohmann::json::array();
            for (const auto& s : rep.specialized) sp.push_back({{"n", s.n}, {"equal", s.equal}});
            j["specialized"] = sp;
        }
        return j;
    }
};

int run_verify(const VerifyArgs& a) {
    std::vector<std::pair<std::string, LinkDiagram>> work;
    if (a.all) {
        for (const auto& e : a.input.corpus()) work.emplace_back(e.name, e.diagram());
    } else {
        work.emplace_back(a.input.label(), a.input.diagram());
    }
    const RuleTable t = table_for(a.family, a.table_file);
    std::vector<VerifyRow> rows;
    bool ok = true;
    for (const auto& [name, d] : work) {
        rows.push_back({name, verify_identity(d, t.family, {a.jobs}, &t)});
        std::cout << rows.back().line() << '\n';
        ok = ok && rows.back().passed();
    }
    if (!a.report.empty()) {
        std::string text;
        if (a.report_format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) j.push_back(r.json());
            text = j.dump(2) + "\n";
        } else {
            for (const auto& r : rows) text += r.line() + "\n";
        }
        write_file(a.report, text);
    }
    return ok ? kOk : kFailed;
}

// --- corpus --------------------------------------------------------------------

int run_corpus_list(const Input& in) {
    for (const auto& e : in.corpus()) {
        const LinkDiagram d = e.diagram();
        std::cout << e.name << "  crossings=" << d.crossing_count() << "  components=" << d.component_count() << '\n';
    }
    return kOk;
}

int run_corpus_regen(const std::string& in_file, const std::string& out_file) {
    auto entries = in_file.empty() ? bundled_corpus() : parse_corpus(read_file(in_file));
    for (auto& e : entries) e = with_oracles(std::move(e));
    // Keep the leading comment block of the source file.
    std::string header;
    if (!in_file.empty()) {
        std::istringstream src(read_file(in_file));
        std::string line;
        while (std::getline(src, line) && !line.empty() && line[0] == '#') header += line + "\n";
        if (!header.empty()) header += "\n";
    }
    write_file(out_file, header + format_corpus(entries));
    return kOk;
}

int run_corpus_check(const Input& in, unsigned jobs) {
    const auto rep = cross_check(in.corpus(), jobs);
    for (const auto& r : rep.rows) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name;
        if (!r.error.empty()) {
            std::cout << "  error: " << r.error << '\n';
            continue;
        }
        std::cout << "  components=" << (r.components_ok ? "ok" : "mismatch") << "  homfly="
                  << (r.homfly_ok ? "ok" : "mismatch") << "  kauffman=" << (r.kauffman_ok ? "ok" : "mismatch")
                  << "  identity=" << (r.identity_ok ? "ok" : "mismatch") << '\n';
        if (!r.homfly_ok) std::cout << "    homfly computed: " << r.homfly.to_string() << '\n';
        if (!r.kauffman_ok) std::cout << "    kauffman computed: " << r.kauffman.to_string() << '\n';
    }
    return rep.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman and HOMFLY-PT polynomials of link diagrams, and their state expansion"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "evaluate P (homfly) or F (kauffman)");
    compute->add_option("invariant", ca.invariant, "homfly | kauffman")
        ->required()
        ->check(CLI::IsMember({"homfly", "kauffman"}));
    ca.input.add_to(compute);
    compute->add_option("--specialize", ca.specialize, "substitute a = q^n");
    compute->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

    ExpandArgs ea;
    ea.jobs = default_jobs();
    auto* expand_cmd = app.add_subcommand("expand", "state expansion of the Kauffman polynomial");
    ea.input.add_to(expand_cmd);
    expand_cmd->add_option("--family", ea.family)->check(CLI::IsMember({"dn", "bn"}));
    expand_cmd->add_option("--table", ea.table_file, "rule table JSON (overrides --family)");
    expand_cmd->add_flag("--states", ea.states, "print one row per state");
    expand_cmd->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json"}));
    expand_cmd->add_option("--jobs", ea.jobs, "worker threads (default $JAEGER_JOBS or 1)")->check(CLI::PositiveNumber);

    VerifyArgs va;
    va.jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "check the expansion against the Kauffman polynomial");
    {
        auto* g = verify->add_option_group("input");
        g->add_flag("--all", va.all, "every corpus entry");
        g->add_option("--pd", va.input.pd_file);
        g->add_option("--pd-text", va.input.pd_text);
        g->add_option("--braid", va.input.braid);
        g->add_option("--name", va.input.name);
        g->require_option(1);
        verify->add_option("--corpus", va.input.corpus_file);
    }
    verify->add_option("--family", va.family)->check(CLI::IsMember({"dn", "bn"}));
    verify->add_option("--table", va.table_file, "rule table JSON (overrides --family)");
    verify->add_option("--report", va.report, "write the rows to this file");
    verify->add_option("--report-format", va.report_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber);

    auto* corpus = app.add_subcommand("corpus", "list, check or regenerate a corpus");
    corpus->require_subcommand(1);
    Input corpus_in;
    unsigned check_jobs = default_jobs();
    std::string regen_in, regen_out = "-";
    auto* list = corpus->add_subcommand("list", "entries with crossing and component counts");
    list->add_option("--corpus", corpus_in.corpus_file);
    auto* check = corpus->add_subcommand("check", "compare both engines with the stored values");
    check->add_option("--corpus", corpus_in.corpus_file);
    check->add_option("--jobs", check_jobs)->check(CLI::PositiveNumber);
    auto* regen = corpus->add_subcommand("regen", "recompute stored values by the independent slow path");
    regen->add_option("--in", regen_in, "source corpus (default: bundled)");
    regen->add_option("--out", regen_out, "destination ('-' for stdout)");

    std::string table_family = "dn";
    auto* table = app.add_subcommand("table", "print a shipped rule table as JSON");
    table->add_option("--family", table_family)->check(CLI::IsMember({"dn", "bn"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*compute) return run_compute(ca);
        if (*expand_cmd) return run_expand(ea);
        if (*verify) return run_verify(va);
        if (*list) return run_corpus_list(corpus_in);
        if (*check) return run_corpus_check(corpus_in, check_jobs);
        if (*regen) return run_corpus_regen(regen_in, regen_out);
        if (*table) {
            std::cout << to_json(default_rule_table(family_from(table_family))).dump(2) << '\n';
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DiagramError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
