// Command-line front end: residues, indices, admissibility verdicts, explicit
// division-algebra constructions, and randomized local-global checks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brauer/certificate.hpp"
#include "brauer/group.hpp"
#include "brauer/report.hpp"
#include "brauer/symbols.hpp"
#include "brauer/tower.hpp"

namespace {

using namespace brauer;

int exit_code_for(errc k) {
    switch (k) {
        case errc::syntax_error:
        case errc::invalid_input:
        case errc::division_by_zero_polynomial:
            return 2;
        case errc::roots_of_unity_missing:
        case errc::not_prime_power:
        case errc::precondition_violated:
        case errc::not_prime:
        case errc::degree_zero:
        case errc::bound_exceeded:
        case errc::zero_element:
        case errc::zero_polynomial:
        case errc::zero_function:
        case errc::not_a_unit:
            return 3;
        case errc::order_condition_failed:
            return 4;
        case errc::step_failed:
        case errc::internal:
            return 5;
    }
    return 5;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    require(in.good(), errc::invalid_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string format = "text";
};

void emit(const RunReport& rep, const Options& opt) {
    std::cout << (opt.format == "record" ? rep.as_record() : rep.as_text());
}

void header(RunReport& rep, const std::string& command) {
    rep.put("tool", "brauertool");
    rep.put("version", kToolVersion);
    rep.put("command", command);
}

void place_table(RunReport& rep, const GlobalClass& cls) {
    auto ram = ramification_divisor(cls);
    rep.put("places", static_cast<std::uint64_t>(ram.size()));
    for (std::size_t i = 0; i < ram.size(); ++i) {
        std::string p = "place." + std::to_string(i + 1);
        rep.put(p, ram[i].place.to_string());
        rep.put(p + ".residue", ram[i].residue_class.to_string());
        rep.put(p + ".invariant", ram[i].invariant);
        rep.put(p + ".index", ram[i].index);
    }
}

int cmd_residue(const std::string& input, const std::string& field_spec, const Options& opt) {
    const FiniteField& k = parse_field(field_spec);
    GlobalClass cls = parse_global_class(input, k);
    RunReport rep;
    header(rep, "residue");
    rep.put("field", k.name());
    rep.put("class", print_global_class(cls));
    place_table(rep, cls);
    rep.put("reciprocity", reciprocity_check(cls) ? "ok" : "violated");
    emit(rep, opt);
    return 0;
}

int cmd_index_global(const std::string& input, const std::string& field_spec, const Options& opt) {
    const FiniteField& k = parse_field(field_spec);
    GlobalClass cls = parse_global_class(input, k);
    RunReport rep;
    header(rep, "index");
    rep.put("mode", "global");
    rep.put("field", k.name());
    rep.put("class", print_global_class(cls));
    place_table(rep, cls);
    rep.put("global.index", global_index(cls));
    bool pp = false;
    {
        std::uint64_t n = cls.n, l = 0;
        for (std::uint64_t d = 2; d <= n; ++d)
            if (n % d == 0) {
                l = d;
                break;
            }
        if (l != 0) {
            std::uint64_t t = n;
            while (t % l == 0) t /= l;
            pp = (t == 1);
        }
    }
    if (pp) rep.put("witness", hasse_witness(cls).to_string());
    emit(rep, opt);
    return 0;
}

int cmd_index_tower(const std::string& input, const Options& opt) {
    TowerClass cls = parse_tower_class(input);
    TowerIndexResult res = tower_index(cls);
    RunReport rep;
    header(rep, "index");
    rep.put("mode", "tower");
    rep.put("field", cls.field.base->name());
    rep.put("class", print_tower_class(cls));
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        std::string p = "peel." + std::to_string(i + 1);
        rep.put(p + ".param", res.trace[i].param);
        rep.put(p + ".residue", res.trace[i].gamma);
        rep.put(p + ".e_ram", res.trace[i].e_ram);
        rep.put(p + ".f_res", res.trace[i].f_res);
        rep.put(p + ".order", res.trace[i].order);
        if (!res.trace[i].ext_modulus.empty()) rep.put(p + ".ext_modulus", res.trace[i].ext_modulus);
        if (!res.trace[i].substitution.empty()) rep.put(p + ".substitution", res.trace[i].substitution);
    }
    rep.put("index", res.index);
    emit(rep, opt);
    return 0;
}

int cmd_classify(const std::string& input, const FieldModel& model, const Options& opt) {
    GroupInput g = parse_group(input);
    Verdict v = g.abelian ? classify(*g.abelian, model) : classify(*g.table, model);
    RunReport rep;
    header(rep, "classify");
    if (g.abelian) {
        std::string factors;
        for (std::size_t i = 0; i < g.abelian->invariant_factors.size(); ++i) {
            if (i) factors += ",";
            factors += std::to_string(g.abelian->invariant_factors[i]);
        }
        rep.put("group", "abelian [" + factors + "]");
        rep.put("order", g.abelian->order());
    } else {
        rep.put("group", "table");
        rep.put("order", static_cast<std::uint64_t>(g.table->order()));
    }
    rep.put("model.residue_char", model.residue_char);
    rep.put("model.residue_kind", model.residue_kind == ResidueKind::finite   ? "finite"
                                  : model.residue_kind == ResidueKind::local  ? "local"
                                  : model.residue_kind == ResidueKind::global ? "global"
                                                                              : "other");
    rep.put("model.mu", model.roots_of_unity_bound);
    rep.put("model.two_dim_local", model.two_dim_local ? "yes" : "no");
    rep.put("verdict", verdict_kind_name(v.kind));
    if (v.kind == VerdictKind::not_admissible) rep.put("witness_prime", v.witness_prime);
    for (std::size_t i = 0; i < v.reason_codes.size(); ++i) {
        rep.put("reason." + std::to_string(i + 1) + ".code", v.reason_codes[i]);
        rep.put("reason." + std::to_string(i + 1), v.reasons[i]);
    }
    for (const auto& s : v.sylow) {
        std::string p = "sylow." + std::to_string(s.prime);
        rep.put(p + ".abelian", s.abelian ? "yes" : "no");
        if (s.abelian) rep.put(p + ".rank", static_cast<std::uint64_t>(s.rank));
        rep.put(p + ".series", s.series_exists ? "found" : "none");
    }
    emit(rep, opt);
    return 0;
}

int cmd_construct(const std::string& kind, const std::string& orders_csv, std::uint64_t q,
                  const std::string& lambda_s, const std::string& a_s, bool verify,
                  const std::string& out_path, const Options& opt) {
    std::uint64_t p = q, e = 0;
    {
        std::uint64_t m = q;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        while (m % p == 0 && m > 1) {
            m /= p;
            ++e;
        }
        require(m == 1 && e >= 1, errc::invalid_input, std::to_string(q) + " is not a prime power");
    }
    const FiniteField& k = FiniteField::get(p, static_cast<unsigned>(e));
    ConstructionSpec spec;
    spec.kind = kind;
    spec.k = &k;
    {
        std::istringstream os(orders_csv);
        std::string item;
        std::size_t i = 0;
        while (std::getline(os, item, ',') && i < 4) spec.orders[i++] = std::stoull(item);
        require(i == 4, errc::invalid_input, "--orders needs four comma-separated entries");
    }
    spec.lambda = k.parse_elem(lambda_s);
    spec.a = k.parse_elem(a_s);

    BuildResult res = (kind == "thm45") ? build_thm45(spec) : build_thm42(spec);
    RunReport rep;
    header(rep, "construct");
    rep.put("kind", kind);
    rep.put("field", k.name());
    rep.put("orders", orders_csv);
    rep.put("lambda", k.to_string(spec.lambda));
    if (kind == "thm42") rep.put("a", k.to_string(spec.a));
    rep.put("degree", res.certificate.degree);

    std::string cert_text = serialize_certificate(res.certificate);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        require(out.good(), errc::invalid_input, "cannot write '" + out_path + "'");
        out << cert_text;
        rep.put("certificate_file", out_path);
    }
    if (verify) {
        VerifiedIndex vi = verify_certificate(res.certificate);
        rep.put("verified.index", vi.index);
        rep.put("verified.division", vi.division ? "true" : "false");
        for (std::size_t i = 0; i < vi.trace.size(); ++i)
            rep.put("verified.step." + std::to_string(i + 1), vi.trace[i]);
    }
    emit(rep, opt);
    std::cout << "\n" << render_presentation(res.algebra, res.subfield);
    if (out_path.empty()) std::cout << "\n" << cert_text;
    return 0;
}

RatFunc random_ratfunc(const FiniteField& k, Lcg& rng) {
    auto random_poly = [&](int deg) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
        for (auto& ci : c) ci = rng.bounded(k.q());
        c.back() = 1 + rng.bounded(k.q() - 1);
        return Poly(k, std::move(c));
    };
    Poly num = random_poly(static_cast<int>(rng.bounded(3)));
    if (rng.bounded(3) == 0) return RatFunc(num, random_poly(static_cast<int>(1 + rng.bounded(2))));
    return RatFunc::from_poly(num);
}

int cmd_hasse(std::uint64_t count, std::uint64_t q, std::uint64_t n, std::uint64_t seed, const Options& opt) {
    std::uint64_t p = q, e = 0;
    {
        std::uint64_t m = q;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        while (m > 1 && m % p == 0) {
            m /= p;
            ++e;
        }
        require(m == 1 && e >= 1, errc::invalid_input, std::to_string(q) + " is not a prime power");
    }
    const FiniteField& k = FiniteField::get(p, static_cast<unsigned>(e));
    require(n >= 2 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
    {
        std::uint64_t l = 0, t = n;
        for (std::uint64_t d = 2; d <= n; ++d)
            if (n % d == 0) {
                l = d;
                break;
            }
        while (l != 0 && t % l == 0) t /= l;
        require(l != 0 && t == 1, errc::not_prime_power, "--n must be a prime power");
    }

    Lcg rng(seed);
    std::uint64_t witnesses = 0, reciprocity_ok = 0;
    RunReport rep;
    header(rep, "hasse");
    rep.put("field", k.name());
    rep.put("n", n);
    rep.put("count", count);
    rep.put("seed", seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        GlobalClass cls(k, n);
        std::uint64_t sym_count = 1 + rng.bounded(2);
        for (std::uint64_t s = 0; s < sym_count; ++s) cls.push(random_ratfunc(k, rng), random_ratfunc(k, rng));
        std::uint64_t g = global_index(cls);
        Place w = hasse_witness(cls);
        bool witness_ok = (g == 1) ? w.is_infinity() : local_index(cls, w) == g;
        bool rec = reciprocity_check(cls);
        if (witness_ok) ++witnesses;
        if (rec) ++reciprocity_ok;
        if (!witness_ok || !rec) rep.put("failure." + std::to_string(i), print_global_class(cls));
    }
    rep.put("witness_found", std::to_string(witnesses) + "/" + std::to_string(count));
    rep.put("reciprocity", std::to_string(reciprocity_ok) + "/" + std::to_string(count));
    emit(rep, opt);
    require(witnesses == count && reciprocity_ok == count, errc::internal,
            "randomized local-global check failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbol-algebra and admissibility toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "record"}));

    std::string input_path, field_spec = "GF(3)", expr;

    auto* residue = app.add_subcommand("residue", "tabulate ramification and invariants of a class");
    residue->add_option("file", input_path, "class file (or - for stdin)");
    residue->add_option("--expr", expr, "inline class text");
    residue->add_option("--field", field_spec, "base field, e.g. GF(5)");

    bool use_tower = false, use_global = false;
    auto* index = app.add_subcommand("index", "global or tower index with trace");
    index->add_option("file", input_path, "class file (or - for stdin)");
    index->add_option("--expr", expr, "inline class text");
    index->add_option("--field", field_spec, "base field for --global classes");
    index->add_flag("--tower", use_tower, "treat input as a tower class");
    index->add_flag("--global", use_global, "treat input as a class over F_q(t)");

    FieldModel model;
    std::string residue_kind = "finite";
    auto* classify_cmd = app.add_subcommand("classify", "admissibility verdict for a finite group");
    classify_cmd->add_option("file", input_path, "group file (or - for stdin)");
    classify_cmd->add_option("--expr", expr, "inline group text");
    classify_cmd->add_option("--residue-char", model.residue_char, "residue characteristic (0 for char 0)");
    classify_cmd->add_option("--residue-kind", residue_kind, "finite|local|global|other");
    classify_cmd->add_option("--mu", model.roots_of_unity_bound, "largest n with mu_n in the base field");
    classify_cmd->add_flag("--two-dim-local", model.two_dim_local,
                           "function field of a curve over a complete discretely valued field");

    std::string kind = "thm45", orders_csv = "1,1,1,1", lambda_s = "1", a_s = "0", out_path;
    std::uint64_t q = 5;
    bool verify = false;
    auto* construct = app.add_subcommand("construct", "emit a division algebra with certificate");
    construct->add_option("--kind", kind, "thm45 or thm42")->check(CLI::IsMember({"thm45", "thm42"}));
    construct->add_option("--orders", orders_csv, "four cyclic orders l1,l2,l3,l4");
    construct->add_option("--q", q, "base field size");
    construct->add_option("--lambda", lambda_s, "unit with the required radical degree");
    construct->add_option("--a", a_s, "auxiliary unit (thm42)");
    construct->add_flag("--verify", verify, "replay the certificate");
    construct->add_option("--out", out_path, "write the certificate to a file");

    std::uint64_t count = 0, n = 2, seed = 1;
    auto* hasse = app.add_subcommand("hasse", "randomized witness and reciprocity check");
    hasse->add_option("--random", count, "number of random classes");
    hasse->add_option("--q", q, "base field size");
    hasse->add_option("--n", n, "symbol degree (prime power)");
    hasse->add_option("--seed", seed, "seed for the linear generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (residue_kind == "finite")
            model.residue_kind = ResidueKind::finite;
        else if (residue_kind == "local")
            model.residue_kind = ResidueKind::local;
        else if (residue_kind == "global")
            model.residue_kind = ResidueKind::global;
        else if (residue_kind == "other")
            model.residue_kind = ResidueKind::other;
        else
            fail(errc::invalid_input, "bad --residue-kind '" + residue_kind + "'");

        auto input = [&]() {
            if (!expr.empty()) return expr;
            require(!input_path.empty(), errc::invalid_input, "provide a file argument or --expr");
            return read_input(input_path);
        };

        if (app.got_subcommand(residue)) {
            rc = cmd_residue(input(), field_spec, opt);
        } else if (app.got_subcommand(index)) {
            require(use_tower != use_global, errc::invalid_input, "choose exactly one of --tower/--global");
            rc = use_tower ? cmd_index_tower(input(), opt) : cmd_index_global(input(), field_spec, opt);
        } else if (app.got_subcommand(classify_cmd)) {
            rc = cmd_classify(input(), model, opt);
        } else if (app.got_subcommand(construct)) {
            rc = cmd_construct(kind, orders_csv, q, lambda_s, a_s, verify, out_path, opt);
        } else if (app.got_subcommand(hasse)) {
            rc = cmd_hasse(count, q, n, seed, opt);
        }
    } catch (const brauer::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = 5;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return rc;
}
