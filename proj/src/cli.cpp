#include "zerosum/cli.hpp"

#include "zerosum/bounds.hpp"
#include "zerosum/classify.hpp"
#include "zerosum/error.hpp"
#include "zerosum/format.hpp"
#include "zerosum/lemmas.hpp"
#include "zerosum/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

namespace zerosum::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t max_trials = 10'000'000;

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json header(const RunConfig& c)
{
    std::string command = c.command;
    if (!c.subcommand.empty())
        command += " " + c.subcommand;
    return json{{"schema", "1"}, {"command", command}};
}

json set_json(const GroupSpec& g, const ElementSet& s)
{
    json out = json::array();
    s.for_each([&](Element e) { out.push_back(element_json(g, e)); });
    return out;
}

json record_json(const GroupSpec& g, const SequenceRecord& r)
{
    return json{{"sequence", render_sequence(g, r.mult)}, {"lengths", r.lengths}, {"support", r.support}};
}

json instance_json(const GroupSpec& g, const FamilyInstance& inst)
{
    json j{{"family", family_tag(inst.tag)},
           {"g", element_json(g, inst.g)},
           {"r", inst.r},
           {"sequence", render_sequence(inst.sequence)}};
    if (inst.aux)
        j["aux"] = element_json(g, *inst.aux);
    if (inst.x)
        j["x"] = *inst.x;
    return j;
}

// --- human rendering: a thin view over the JSON report -----------------------

void render_value(std::ostream& out, const json& v, int indent);

void render_object(std::ostream& out, const json& obj, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : obj.items()) {
        if (key == "schema")
            continue;
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_object(out, value, indent + 2);
        } else if (value.is_array() && !value.empty() && !value.front().is_primitive()) {
            out << pad << key << ": " << value.size() << " entries\n";
            std::size_t shown = 0;
            for (const auto& item : value) {
                if (shown++ == 20) {
                    out << pad << "  ...\n";
                    break;
                }
                out << pad << "  - " << item.dump() << '\n';
            }
        } else {
            out << pad << key << ": ";
            render_value(out, value, indent);
            out << '\n';
        }
    }
}

void render_value(std::ostream& out, const json& v, int)
{
    if (v.is_string())
        out << v.get<std::string>();
    else
        out << v.dump();
}

int emit(const RunConfig& c, const json& report, std::ostream& out, int code)
{
    if (c.json_path) {
        std::ofstream f(*c.json_path);
        if (!f)
            throw UsageError("cannot write " + *c.json_path);
        f << report.dump(2) << '\n';
    }
    if (c.json_stdout)
        out << report.dump(2) << '\n';
    else
        render_object(out, report, 0);
    return code;
}

// --- commands -----------------------------------------------------------------

int cmd_analyze(const RunConfig& c, std::ostream& out)
{
    const auto g = parse_group(c.group);
    const auto s = parse_sequence(g, c.sequence);
    const auto table = sums_by_length(s);
    const auto profile = zero_sum_profile(table);

    json j = header(c);
    j["group"] = g.name();
    j["sequence"] = render_sequence(s);
    j["length"] = s.length();
    j["sigma"] = element_json(g, sigma(s));
    j["max_multiplicity"] = max_multiplicity(s);
    j["support"] = set_json(g, s.support());
    j["lengths"] = profile.lengths;
    j["unique_r"] = profile.unique_r ? json(*profile.unique_r) : json(nullptr);
    json rows = json::array();
    for (std::size_t l = 0; l <= table.max_length(); ++l)
        rows.push_back(table.row(l).size());
    j["row_sizes"] = rows;
    j["complement_identity"] = table.complement_identity_holds();
    if (s.length() <= c.max_brute_terms) {
        const auto oracle = brute_force_table(s, c.max_brute_terms);
        bool agrees = true;
        for (std::size_t l = 0; l <= s.length(); ++l)
            agrees = agrees && oracle[l] == table.row(l);
        j["oracle_agrees"] = agrees;
    }
    if (s.length() == g.order()) {
        json tags = json::array();
        for (const auto& inst : match_family(s))
            tags.push_back(instance_json(g, inst));
        j["families"] = tags;
    }
    // analyze always answers in JSON
    RunConfig as_json = c;
    as_json.json_stdout = true;
    return emit(as_json, j, out, confirmed);
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    const auto g = parse_group(c.group);
    const auto rep = verify_theorem(g, VerifyOptions{c.dedup, c.jobs, c.max_multisets});

    json j = header(c);
    j["group"] = g.name();
    j["shape"] = shape_name(rep.shape);
    j["up_to_automorphism"] = rep.up_to_automorphism;
    j["total"] = rep.total;
    j["representatives"] = rep.representatives;
    j["qualifying"] = rep.qualifying;
    j["matched"] = rep.matched;
    j["qualifying_weighted"] = rep.qualifying_weighted;
    j["matched_weighted"] = rep.matched_weighted;
    json by_r = json::object();
    for (const auto& [r, count] : rep.qualifying_by_r)
        by_r[std::to_string(r)] = count;
    j["qualifying_by_r"] = by_r;
    j["family_instances"] = rep.family_instances;
    j["family_sequences"] = rep.family_sequences;

    json mismatches = json::array();
    for (const auto& m : rep.mismatches) {
        auto rec = record_json(g, m.record);
        rec["kind"] = m.kind == MismatchKind::QualifyingUnmatched ? "qualifying_unmatched" : "matched_not_qualifying";
        mismatches.push_back(rec);
    }
    j["mismatches"] = mismatches;
    json support = json::array();
    for (const auto& r : rep.support_violations)
        support.push_back(record_json(g, r));
    j["support_violations"] = support;
    json rv = json::array();
    for (const auto& r : rep.r_violations)
        rv.push_back(record_json(g, r));
    j["r_violations"] = rv;
    json ff = json::array();
    for (const auto& f : rep.family_failures) {
        auto inst = instance_json(g, f.instance);
        inst["lengths"] = f.lengths;
        ff.push_back(inst);
    }
    j["family_failures"] = ff;
    j["tables_checked"] = rep.tables_checked;
    j["complement_violations"] = rep.complement_violations;
    j["padding_checked"] = rep.padding_checked;
    j["padding_violations"] = rep.padding_violations;
    j["notes"] = rep.notes;
    j["confirmed"] = rep.confirmed();
    j["elapsed_ms"] = rep.elapsed_ms;
    return emit(c, j, out, rep.confirmed() ? confirmed : violation);
}

int cmd_families(const RunConfig& c, std::ostream& out)
{
    const auto g = parse_group(c.group);
    const FamilyIndex index(g);
    const auto& cat = index.catalog();
    json j = header(c);
    j["group"] = g.name();
    j["shape"] = shape_name(cat.shape);
    j["count"] = cat.instances.size();
    j["distinct_sequences"] = index.distinct_sequences();
    j["notes"] = cat.notes;
    json list = json::array();
    for (const auto& inst : cat.instances)
        list.push_back(instance_json(g, inst));
    j["instances"] = list;
    return emit(c, j, out, confirmed);
}

int cmd_davenport(const RunConfig& c, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto g = parse_group(c.group);
    const auto d = davenport(g);
    json j = header(c);
    j["group"] = g.name();
    j["order"] = g.order();
    j["davenport"] = d.value;
    j["witness"] = render_sequence(d.witness);
    j["nodes"] = d.nodes;
    const bool upper = d.value <= g.order();
    j["upper_bound_holds"] = upper;
    j["elapsed_ms"] = ms_since(start);
    return emit(c, j, out, upper ? confirmed : violation);
}

void check_trials(const RunConfig& c)
{
    if (c.trials > max_trials)
        throw BudgetExceeded("trial count capped at " + std::to_string(max_trials));
}

int cmd_bounds(const RunConfig& c, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    json j = header(c);
    bool ok = true;
    if (c.subcommand == "dgm") {
        check_trials(c);
        const auto g = parse_group(c.group);
        const auto camp = dgm_random(g, c.trials, c.seed, c.jobs);
        j["group"] = g.name();
        j["trials"] = camp.trials;
        j["seed"] = c.seed;
        j["tight"] = camp.tight;
        j["nontrivial_stabilizer"] = camp.nontrivial_stabilizer;
        j["proper"] = camp.proper;
        j["failures"] = camp.failure_count;
        json failing = json::array();
        for (const auto& f : camp.failures)
            failing.push_back({{"sequence", render_sequence(f.sequence)},
                               {"length", f.report.length},
                               {"sums_size", f.report.sums_size},
                               {"bound", f.report.bound},
                               {"stabilizer_order", f.report.stabilizer_order}});
        j["failing"] = failing;
        ok = camp.failure_count == 0;
    } else if (c.subcommand == "cd") {
        std::uint64_t p = 0;
        try {
            p = std::stoull(c.group);
        } catch (...) {
            throw UsageError("expected a prime, got '" + c.group + "'");
        }
        if (!is_prime(p))
            throw UsageError(c.group + " is not prime");
        if (p > 1000)
            throw BudgetExceeded("Cauchy-Davenport checks capped at p <= 1000");
        CauchyDavenportSummary sum;
        if (c.exhaustive) {
            sum = cauchy_davenport_exhaustive_pairs(static_cast<std::uint32_t>(p));
            j["mode"] = "exhaustive";
        } else {
            check_trials(c);
            sum = cauchy_davenport_random(static_cast<std::uint32_t>(p), c.trials, c.seed, c.max_sets, c.jobs);
            j["mode"] = "random";
            j["trials"] = c.trials;
            j["seed"] = c.seed;
            j["max_sets"] = c.max_sets;
        }
        const auto g = GroupSpec::cyclic(static_cast<std::uint32_t>(p));
        j["p"] = p;
        j["cases"] = sum.cases;
        j["tight"] = sum.tight;
        j["failures"] = sum.failures;
        json failing = json::array();
        for (const auto& sets : sum.failing) {
            json t = json::array();
            for (const auto& s : sets)
                t.push_back(set_json(g, s));
            failing.push_back(t);
        }
        j["failing"] = failing;
        ok = sum.failures == 0;
    } else if (c.subcommand == "prop21") {
        const auto g = parse_group(c.group);
        const auto sum = check_prop21_exhaustive(g);
        j["group"] = g.name();
        j["pairs"] = sum.pairs;
        j["sumset_applicable"] = sum.sumset_applicable;
        j["group_applicable"] = sum.group_applicable;
        j["failures"] = sum.failures;
        json failing = json::array();
        for (const auto& [a, b] : sum.failing_pairs)
            failing.push_back({{"A", set_json(g, a)}, {"B", set_json(g, b)}});
        j["failing"] = failing;
        ok = sum.failures == 0;
    } else {
        throw UsageError("unknown bounds check '" + c.subcommand + "'");
    }
    j["elapsed_ms"] = ms_since(start);
    return emit(c, j, out, ok ? confirmed : violation);
}

int cmd_lemmas(const RunConfig& c, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto g = parse_group(c.group);
    LemmaReport rep;
    if (c.subcommand == "31") {
        rep = check_lemma31(g, c.max_len, c.max_multisets);
    } else if (c.subcommand == "32") {
        if (!is_cyclic(g))
            throw UsageError("lemma 32 is stated over a cyclic group, " + g.name() + " is not cyclic");
        if (g.order() > 4096)
            throw BudgetExceeded("lemma 32 sweep capped at n <= 4096");
        rep = check_lemma32(g.order());
    } else if (c.subcommand == "33") {
        rep = check_lemma33(g);
    } else {
        throw UsageError("unknown lemma '" + c.subcommand + "', expected 31, 32 or 33");
    }
    json j = header(c);
    j["lemma"] = rep.lemma;
    j["group"] = rep.group.name();
    j["total"] = rep.total;
    j["vacuous"] = rep.vacuous;
    j["satisfying"] = rep.satisfying;
    j["conclusion_holds"] = rep.conclusion_holds;
    j["counterexamples"] = rep.counterexample_count();
    json ex = json::array();
    for (const auto& cex : rep.counterexamples) {
        json e{{"g", element_json(rep.group, cex.g)},
               {"sequence", render_sequence(cex.sequence)},
               {"detail", cex.detail}};
        if (cex.h)
            e["h"] = element_json(rep.group, *cex.h);
        ex.push_back(e);
    }
    j["examples"] = ex;
    j["crosschecks"] = rep.crosschecks;
    j["crosscheck_failures"] = rep.crosscheck_failures;
    j["passed"] = rep.passed();
    j["elapsed_ms"] = ms_since(start);
    return emit(c, j, out, rep.passed() ? confirmed : violation);
}

} // namespace

// ---------------------------------------------------------------------------

RunConfig parse_args(const std::vector<std::string>& args)
{
    RunConfig c;
    c.jobs = default_jobs();

    CLI::App app{"Zero-sum sequence toolkit: unique zero-sum lengths, Davenport constants, sumset bounds"};
    app.require_subcommand(1);

    std::vector<std::string> json_values;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--jobs", c.jobs, "worker threads (default: ZEROSUM_JOBS or hardware)");
        sub->add_option("--seed", c.seed, "RNG seed for randomized checks");
        sub->add_option("--json", json_values, "write the JSON report to PATH, or print it when PATH is omitted")
            ->expected(0, 1);
        sub->add_option("--max-multisets", c.max_multisets, "enumeration budget");
        sub->add_option("--max-brute-terms", c.max_brute_terms, "term cap for subset enumeration");
    };

    auto* analyze = app.add_subcommand("analyze", "zero-sum lengths and Sigma_l row sizes of one sequence");
    analyze->add_option("group", c.group)->required();
    analyze->add_option("sequence", c.sequence)->required();
    common(analyze);

    auto* verify = app.add_subcommand("verify", "exhaustive sweep of all length-|G| sequences");
    verify->add_option("group", c.group)->required();
    bool no_aut = false;
    verify->add_flag("--no-aut", no_aut, "disable automorphism orbit reduction");
    common(verify);

    auto* families = app.add_subcommand("families", "list the unique-length family instances");
    families->add_option("group", c.group)->required();
    common(families);

    auto* dav = app.add_subcommand("davenport", "Davenport constant by exhaustive search");
    dav->add_option("group", c.group)->required();
    common(dav);

    auto* bounds = app.add_subcommand("bounds", "sumset inequality checkers");
    bounds->require_subcommand(1);
    auto* dgm = bounds->add_subcommand("dgm", "subsequence-sum lower bound on random (S, l)");
    dgm->add_option("group", c.group)->required();
    dgm->add_option("--trials", c.trials);
    common(dgm);
    auto* cd = bounds->add_subcommand("cd", "Cauchy-Davenport over C_p");
    cd->add_option("p", c.group)->required();
    cd->add_flag("--exhaustive", c.exhaustive, "all pairs of nonempty subsets");
    cd->add_option("--trials", c.trials);
    cd->add_option("--max-sets", c.max_sets, "largest tuple size for random trials");
    common(cd);
    auto* prop = bounds->add_subcommand("prop21", "representation-count implications, all subset pairs");
    prop->add_option("group", c.group)->required();
    prop->add_flag("--exhaustive", c.exhaustive);
    common(prop);

    auto* lem = app.add_subcommand("lemmas", "implication oracles for the auxiliary lemmas");
    lem->add_option("which", c.subcommand, "31, 32 or 33")->required();
    lem->add_option("group", c.group)->required();
    lem->add_option("--max-len", c.max_len, "cap on |R| for lemma 31");
    common(lem);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        for (auto* leaf : sub->get_subcommands())
            c.subcommand = leaf->get_name();
    }
    c.dedup = !no_aut;
    if (c.jobs == 0)
        throw UsageError("--jobs must be at least 1");

    // --json may appear on any leaf; find the one that was used.
    for (auto* sub : {analyze, verify, families, dav, dgm, cd, prop, lem}) {
        if (auto* opt = sub->get_option_no_throw("--json"); opt != nullptr && opt->count() > 0) {
            if (json_values.empty() || json_values.front().empty())
                c.json_stdout = true;
            else
                c.json_path = json_values.front();
        }
    }
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.command == "analyze")
            return cmd_analyze(c, out);
        if (c.command == "verify")
            return cmd_verify(c, out);
        if (c.command == "families")
            return cmd_families(c, out);
        if (c.command == "davenport")
            return cmd_davenport(c, out);
        if (c.command == "bounds")
            return cmd_bounds(c, out);
        if (c.command == "lemmas")
            return cmd_lemmas(c, out);
        err << "error: unknown command '" << c.command << "'\n";
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return usage;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const CLI::CallForHelp&) {
        out << "usage: zerosum <analyze|verify|families|davenport|bounds|lemmas> ... (see --help of each command)\n";
        return confirmed;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return run(config, out, err);
}

} // namespace zerosum::cli
