#include "mvl/cli.hpp"

#include "mvl/cover_poset.hpp"
#include "mvl/elim_count.hpp"
#include "mvl/errors.hpp"
#include "mvl/io.hpp"
#include "mvl/report.hpp"
#include "mvl/selftest.hpp"
#include "mvl/sensitivity.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>

namespace mvl::cli {

namespace {

struct Options {
    std::uint64_t seed = 1;

    std::size_t n = 0;
    std::vector<std::string> xs;
    bool verify = false;
    std::vector<std::size_t> profile;
    std::optional<std::size_t> max_size;

    std::string gate_file;
    std::string functionals_file;
    std::string data_file;
    std::string eps = "0";
    std::string delta = "1/1000";

    std::size_t random_instances = 1000;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

std::vector<SignVector> parse_members(const std::vector<std::string>& xs) {
    std::vector<SignVector> out;
    for (const auto& x : xs) {
        SignVector v = SignVector::parse(x);
        if (!v.is_canonical()) {
            throw DomainError("'" + x + "' is not canonical: its first nonzero entry must be '+'");
        }
        out.push_back(std::move(v));
    }
    if (!out.empty()) {
        for (const auto& v : out) {
            if (v.size() != out.front().size()) throw DomainError("all sign vectors must have the same length");
        }
    }
    return out;
}

Json string_list(const std::vector<std::string>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x);
    return out;
}

int cmd_zs(const Options& o, std::ostream& out) {
    Json doc;
    doc["n"] = o.n;
    doc["size"] = zs_size(o.n);
    Json members = Json::array();
    for_each_zs(o.n, [&](const SignVector& s) { members.push_back(s.str()); });
    doc["members"] = std::move(members);
    emit(out, doc);
    return exit_ok;
}

int cmd_ze(const Options& o, std::ostream& out) {
    std::vector<TotalSignVector> ts;
    for (const auto& x : o.xs) ts.push_back(TotalSignVector::parse(x));
    for (const auto& t : ts) {
        if (t.size() != o.n) throw DomainError("eliminator '" + t.str() + "' does not have length " + std::to_string(o.n));
    }
    const SignSet eliminated = ze(ts, o.n);
    Json doc;
    doc["n"] = o.n;
    doc["eliminators"] = string_list(o.xs);
    doc["size"] = eliminated.size();
    doc["eliminated"] = to_json(eliminated);
    emit(out, doc);
    return exit_ok;
}

int finish_count(Json doc, const Integer& value, std::optional<std::uint64_t> oracle, std::ostream& out,
                 std::ostream& err) {
    doc["count"] = integer_json(value);
    if (oracle) {
        doc["oracle"] = *oracle;
        doc["agrees"] = value == *oracle;
    }
    emit(out, doc);
    if (oracle && value != *oracle) {
        err << "error: closed form disagrees with the enumeration oracle\n";
        return exit_invariant;
    }
    return exit_ok;
}

int cmd_count(const std::string& op, const Options& o, std::ostream& out, std::ostream& err) {
    Json doc;
    doc["operation"] = op;
    if (op == "oracle") {
        std::vector<TotalSignVector> ts;
        for (const auto& x : o.xs) ts.push_back(TotalSignVector::parse(x));
        std::size_t n = o.n;
        if (n == 0) {
            if (ts.empty()) throw DomainError("count oracle needs --n when no --x is given");
            n = ts.front().size();
        }
        doc["n"] = n;
        doc["x"] = string_list(o.xs);
        doc["count"] = count_ze_oracle(ts, n);
        emit(out, doc);
        return exit_ok;
    }
    if (op == "pair" && !o.profile.empty()) {
        if (o.profile.size() != 5) throw DomainError("--profile takes five counts a1,a2,b1,b2,c");
        PairColumnProfile p{o.profile[0], o.profile[1], o.profile[2], o.profile[3], o.profile[4]};
        const PairCounts pc = count_pair(p);
        doc["profile"] = o.profile;
        doc["n"] = p.n();
        doc["intersection"] = integer_json(pc.intersection);
        doc["union"] = integer_json(pc.union_size);
        emit(out, doc);
        return exit_ok;
    }

    const auto members = parse_members(o.xs);
    if (members.empty()) throw DomainError("count " + op + " needs at least one --x");
    const std::size_t n = members.front().size();
    doc["n"] = n;
    doc["x"] = string_list(o.xs);

    if (op == "single") {
        if (members.size() != 1) throw DomainError("count single takes exactly one --x");
        std::optional<std::uint64_t> oracle;
        if (o.verify) oracle = count_ze_oracle(std::vector<TotalSignVector>{members.front()}, n);
        doc["zeros"] = members.front().zero_count();
        return finish_count(std::move(doc), count_ze_single(members.front()), oracle, out, err);
    }
    if (op == "intersect") {
        SignMatrix m(members);
        std::optional<std::uint64_t> oracle;
        if (o.verify) oracle = intersect_ze_oracle(m);
        doc["zero_columns"] = zero_columns(m);
        return finish_count(std::move(doc), count_ze_intersection(m), oracle, out, err);
    }
    if (op == "set") {
        SignSet set(members.begin(), members.end());
        if (set.size() != members.size()) throw DomainError("count set: duplicate members");
        std::optional<std::uint64_t> oracle;
        if (o.verify) oracle = count_ze_oracle(set, n);
        return finish_count(std::move(doc), count_ze_set(set), oracle, out, err);
    }
    if (op == "pair") {
        if (members.size() != 2) throw DomainError("count pair takes exactly two --x (or --profile)");
        SignMatrix m(members);
        const PairColumnProfile p = profile_pair(m);
        const PairCounts pc = count_pair(p);
        doc["profile"] = std::vector<std::size_t>{p.a1, p.a2, p.b1, p.b2, p.c};
        doc["intersection"] = integer_json(pc.intersection);
        doc["union"] = integer_json(pc.union_size);
        int code = exit_ok;
        if (o.verify) {
            const std::uint64_t oi = intersect_ze_oracle(m);
            const std::uint64_t ou = count_ze_oracle(SignSet(members.begin(), members.end()), n);
            doc["oracle_intersection"] = oi;
            doc["oracle_union"] = ou;
            const bool agrees = pc.intersection == oi && pc.union_size == ou;
            doc["agrees"] = agrees;
            if (!agrees) {
                err << "error: pair closed forms disagree with the enumeration oracle\n";
                code = exit_invariant;
            }
        }
        emit(out, doc);
        return code;
    }
    throw DomainError("unknown count operation '" + op + "'");
}

int cmd_covers(const Options& o, std::ostream& out) {
    const auto covers = minimal_covers(o.n, o.max_size);
    Json doc;
    doc["n"] = o.n;
    doc["max_size"] = o.max_size ? Json(*o.max_size) : Json("exhaustive");
    doc["count"] = covers.size();
    Json list = Json::array();
    for (const auto& c : covers) {
        const CoverReport r = analyze_cover(c, o.n);
        Json item;
        item["subset"] = to_json(r.subset);
        item["size"] = r.subset.size();
        item["is_cover"] = r.is_cover;
        item["is_minimal"] = r.is_minimal ? Json(*r.is_minimal) : Json("not-checked");
        item["rank"] = r.rank;
        list.push_back(std::move(item));
    }
    doc["covers"] = std::move(list);
    emit(out, doc);
    return exit_ok;
}

ProjectionFamily load_family(const Options& o, const Gate& gate, std::string& source) {
    if (o.functionals_file.empty()) {
        source = "sign-family";
        return ProjectionFamily::sign_family(gate.output_dim());
    }
    source = o.functionals_file;
    ProjectionFamily family = parse_functionals(o.functionals_file);
    if (family.dimension() != gate.output_dim()) {
        throw DomainError("functionals have dimension " + std::to_string(family.dimension()) +
                          ", gate outputs have dimension " + std::to_string(gate.output_dim()));
    }
    return family;
}

DataBound load_data_bound(const Options& o, const MultilinearExpansion& e) {
    const auto records = parse_experiment_csv(o.data_file);
    return data_upper_bound(records, e, parse_rational(o.eps), parse_rational(o.delta));
}

int cmd_gate_expand(const Options& o, std::ostream& out) {
    const Gate gate = parse_gate(o.gate_file);
    emit(out, expansion_json(gate, expand(gate)));
    return exit_ok;
}

int cmd_gate_analyze(const Options& o, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    const Gate gate = parse_gate(o.gate_file);
    const MultilinearExpansion e = expand(gate);
    std::string source;
    const ProjectionFamily family = load_family(o, gate, source);

    GateSensitivity analysis = cs_gate(e, family);
    std::optional<DataBound> data;
    if (!o.data_file.empty()) {
        data = load_data_bound(o, e);
        for (std::size_t i = 0; i < data->per_point.size(); ++i) analysis.reports[i].cs_upper = data->per_point[i];
    }
    const std::optional<Certificate> cert = reversibility_certificate(e, family);
    const CrossCheck cc = cross_check_counts(analysis);

    int code = exit_ok;
    if (cert && !verify_certificate(e, *cert)) {
        err << "error: certificate failed replay\n";
        code = exit_invariant;
    }
    if (cc.failed > 0) {
        err << "error: " << cc.failed << " counting cross-check(s) failed\n";
        code = exit_invariant;
    }
    if (data && !data->heuristic) {
        for (const auto& r : analysis.reports) {
            if (r.cs_upper && r.cs_lower.value > r.cs_upper->value) {
                err << "error: lower bound exceeds the data upper bound at a base point\n";
                code = exit_invariant;
            }
        }
    }
    for (const auto& r : data ? data->rejected : std::vector<RejectedRecord>{}) {
        err << "warning: record " << r.record << " rejected: " << r.reason << "\n";
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    emit(out, analysis_document({gate, source, family.size(), analysis, data, cert, cc, elapsed}));
    return code;
}

int cmd_gate_certify(const Options& o, std::ostream& out, std::ostream& err) {
    const Gate gate = parse_gate(o.gate_file);
    const MultilinearExpansion e = expand(gate);
    std::string source;
    const ProjectionFamily family = load_family(o, gate, source);
    const std::optional<Certificate> cert = reversibility_certificate(e, family);
    Json doc;
    doc["N"] = n_of(e);
    doc["certified"] = cert.has_value();
    if (!cert) {
        doc["certificate"] = nullptr;
        doc["note"] = "no certificate found with this projection family; this does not prove non-injectivity";
        emit(out, doc);
        err << "no reversibility certificate found\n";
        return exit_no_certificate;
    }
    const bool replayed = verify_certificate(e, *cert);
    doc["replay_verified"] = replayed;
    doc["certificate"] = to_json(*cert);
    emit(out, doc);
    if (!replayed) {
        err << "error: certificate failed replay\n";
        return exit_invariant;
    }
    return exit_ok;
}

int cmd_data_bound(const Options& o, std::ostream& out, std::ostream& err) {
    const Gate gate = parse_gate(o.gate_file);
    const MultilinearExpansion e = expand(gate);
    const DataBound bound = load_data_bound(o, e);
    for (const auto& r : bound.rejected) err << "warning: record " << r.record << " rejected: " << r.reason << "\n";
    Json doc;
    doc["N"] = n_of(e);
    doc["eps"] = to_string(parse_rational(o.eps));
    doc["delta"] = to_string(parse_rational(o.delta));
    const Json fields = to_json(bound);
    for (const auto& [key, value] : fields.items()) doc[key] = value;
    emit(out, doc);
    return exit_ok;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
    SelftestOptions opts;
    opts.seed = o.seed;
    opts.random_instances = o.random_instances;
    const SelftestResult result = run_oracle_selftest(opts);
    Json doc;
    doc["seed"] = o.seed;
    doc["checks"] = result.checks;
    doc["failures"] = string_list(result.failures);
    doc["ok"] = result.ok();
    emit(out, doc);
    if (!result.ok()) {
        err << "error: " << result.failures.size() << " closed-form count(s) disagree with the oracle\n";
        return exit_invariant;
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Multi-valued logic gate analysis: sign-vector elimination counts, continuous-sensitivity bounds "
                 "and reversibility certificates"};
    app.name("mvlsens");
    app.require_subcommand(1);
    app.fallthrough();  // lets --seed follow the subcommand
    app.add_option("--seed", o.seed, "Seed for all randomized sampling");

    auto* zs = app.add_subcommand("zs", "List ZS_n in enumeration order");
    zs->add_option("--n", o.n, "Length of the sign vectors")->required()->check(CLI::PositiveNumber);

    auto* zecmd = app.add_subcommand("ze", "List ZE(X) for total sign strings X over {+,0,-,u}");
    zecmd->add_option("--n", o.n, "Length of the sign vectors")->required()->check(CLI::PositiveNumber);
    zecmd->add_option("--x", o.xs, "Eliminator (repeatable)");

    auto* count = app.add_subcommand("count", "Closed-form counts of eliminated sets");
    count->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> count_ops;
    for (const char* name : {"single", "intersect", "set", "pair", "oracle"}) {
        auto* sub = count->add_subcommand(name);
        sub->add_option("--x", o.xs, "Sign vector such as \"00+\" (repeatable)");
        sub->add_flag("--verify", o.verify, "Compare with the enumeration oracle");
        if (std::string(name) == "pair") sub->add_option("--profile", o.profile, "Column profile a1 a2 b1 b2 c")->delimiter(',');
        if (std::string(name) == "oracle") sub->add_option("--n", o.n, "Length when no --x is given");
        count_ops.emplace_back(name, sub);
    }
    count->get_subcommand("single")->description("|ZE({x})|");
    count->get_subcommand("intersect")->description("|ZE(x1) cap ... cap ZE(xm)|");
    count->get_subcommand("set")->description("|ZE(X)| by inclusion-exclusion");
    count->get_subcommand("pair")->description("Intersection and union for two vectors via their column profile");
    count->get_subcommand("oracle")->description("|ZE(X)| by brute-force enumeration");

    auto* covers = app.add_subcommand("covers", "Minimal eliminating covers of ZS_n");
    covers->add_option("--n", o.n, "Length of the sign vectors")->required()->check(CLI::PositiveNumber);
    covers->add_option("--max-size", o.max_size, "Largest cover size searched (exhaustive when omitted, n <= 3)");

    auto* gate = app.add_subcommand("gate", "Gate expansion, sensitivity analysis and certification");
    gate->require_subcommand(1);
    auto* expand_cmd = gate->add_subcommand("expand", "Print the multilinear coefficient tensor");
    expand_cmd->add_option("gate", o.gate_file, "Gate JSON file")->required();
    auto* analyze = gate->add_subcommand("analyze", "Continuous-sensitivity bounds at every base point");
    analyze->add_option("gate", o.gate_file, "Gate JSON file")->required();
    analyze->add_option("--functionals", o.functionals_file, "JSON list of linear functionals");
    analyze->add_option("--data", o.data_file, "Experiment CSV for a data upper bound");
    analyze->add_option("--eps", o.eps, "Collision tolerance (0 = exact)");
    analyze->add_option("--delta", o.delta, "Interior margin for experiment records");
    auto* certify = gate->add_subcommand("certify", "Search for a reversibility certificate (exit 2 if none)");
    certify->add_option("gate", o.gate_file, "Gate JSON file")->required();
    certify->add_option("--functionals", o.functionals_file, "JSON list of linear functionals");

    auto* data = app.add_subcommand("data", "Bounds derived from experiment data");
    data->require_subcommand(1);
    auto* bound = data->add_subcommand("bound", "Upper bound on cs from output collisions");
    bound->add_option("gate", o.gate_file, "Gate JSON file")->required();
    bound->add_option("--data", o.data_file, "Experiment CSV")->required();
    bound->add_option("--eps", o.eps, "Collision tolerance (0 = exact)");
    bound->add_option("--delta", o.delta, "Interior margin for experiment records");

    auto* selftest = app.add_subcommand("selftest", "Check every closed-form count against the oracle");
    selftest->add_option("--random", o.random_instances, "Number of random families");

    std::vector<std::string> argv_storage{"mvlsens"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (zs->parsed()) return cmd_zs(o, out);
        if (zecmd->parsed()) return cmd_ze(o, out);
        for (const auto& [name, sub] : count_ops) {
            if (sub->parsed()) return cmd_count(name, o, out, err);
        }
        if (covers->parsed()) return cmd_covers(o, out);
        if (expand_cmd->parsed()) return cmd_gate_expand(o, out);
        if (analyze->parsed()) return cmd_gate_analyze(o, out, err);
        if (certify->parsed()) return cmd_gate_certify(o, out, err);
        if (bound->parsed()) return cmd_data_bound(o, out, err);
        if (selftest->parsed()) return cmd_selftest(o, out, err);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

}  // namespace mvl::cli
