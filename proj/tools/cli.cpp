#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "whit/error.hpp"
#include "whit/json_io.hpp"
#include "whit/lemmas.hpp"
#include "whit/solver.hpp"
#include "whit/text.hpp"

namespace whit::cli {

namespace {

// Bad flag values and missing required inputs; reported like parse errors.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Common {
    std::string format = "text";
    std::string psi;
    unsigned threads = 1;

    bool json() const { return format == "json"; }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

bool looks_like_json(const std::string& s) {
    auto it = std::find_if(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); });
    return it != s.end() && *it == '{';
}

PsiSpec resolve_psi(const Common& c, bool need_specialized) {
    std::string text = c.psi;
    if (text.empty()) {
        if (const char* env = std::getenv("WHIT_PSI")) text = env;
    }
    if (text.empty() || text == "symbolic") {
        if (need_specialized) throw UsageError("this command needs --psi p1,p2,p3 (or WHIT_PSI)");
        return PsiSpec::symbolic();
    }
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError("--psi expects three rationals p1,p2,p3 or 'symbolic'");
    return PsiSpec::specialized(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

LieElt read_lie(const std::string& text) {
    return looks_like_json(text) ? lie_from_json(parse_json(text)) : parse_lie(text);
}

ModuleVector read_vector(const std::string& text, const WhittakerModule& module) {
    return looks_like_json(text) ? vector_from_json(parse_json(text)) : parse_vector(text, module);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct TruncFlags {
    std::string cap;
    std::string entries;
    std::string json;
    std::optional<std::uint32_t> kmax;
    std::optional<std::uint32_t> rmax;
    std::optional<std::uint32_t> max_length;

    void attach(CLI::App* app) {
        app->add_option("--cap", cap, "weight-sum cap a,b");
        app->add_option("--entries", entries, "candidate entries a,b;c,d;...");
        app->add_option("--kmax", kmax, "largest power of h2");
        app->add_option("--rmax", rmax, "largest power of z");
        app->add_option("--max-length", max_length, "bound on l(lambda)+l(mu)");
        app->add_option("--trunc", json, "truncation as JSON");
    }

    bool given() const { return !cap.empty() || !entries.empty() || !json.empty(); }

    Truncation build() const {
        Truncation t;
        if (!json.empty()) {
            t = truncation_from_json(parse_json(json));
        } else {
            if (cap.empty()) throw UsageError("--cap is required");
            t.cap = parse_weight(cap);
            for (const auto& e : split(entries, ';')) {
                if (!e.empty()) t.entries.push_back(parse_weight(e));
            }
        }
        if (kmax) t.kmax = *kmax;
        if (rmax) t.rmax = *rmax;
        if (max_length) t.max_length = *max_length;
        validate(t);
        return t;
    }
};

// Slice spanned by the supports of gens, with room for three more powers of z.
Truncation slice_for(const std::vector<ModuleVector>& gens) {
    Truncation t;
    std::size_t longest = 0;
    for (const auto& v : gens) {
        for (const auto& [m, c] : v.terms()) {
            t.cap = std::max(t.cap, m.lambda.sum() + m.mu.sum());
            for (const auto& e : m.lambda.support()) t.entries.push_back(e);
            for (const auto& e : m.mu.support()) t.entries.push_back(e);
            t.kmax = std::max(t.kmax, m.k);
            t.rmax = std::max(t.rmax, m.r + 3);
            longest = std::max(longest, m.lambda.length() + m.mu.length());
        }
    }
    std::sort(t.entries.begin(), t.entries.end());
    t.entries.erase(std::unique(t.entries.begin(), t.entries.end()), t.entries.end());
    if (t.cap[0] > 0) t.max_length = static_cast<std::uint32_t>(longest);
    return t;
}

std::string step_text(const ReductionStep& s) {
    std::string op = format_generator(s.op);
    if (!s.psi_value.is_zero()) {
        std::string p = format_scalar(s.psi_value);
        if (p.front() == '-') {
            op += " + " + p.substr(1);
        } else {
            op += " - " + p;
        }
        op = "(" + op + ")";
    }
    if (s.exponent != 1) op += "^" + std::to_string(s.exponent);
    return "lemma " + lemma_name(s.lemma) + ": " + op + ", " + format_triple(s.degree_before) + " -> " +
           format_triple(s.degree_after);
}

int cmd_verify_decompose(const Common& c, std::ostream& out) {
    std::size_t total = 0;
    std::size_t exact = 0;
    std::size_t printed_cases = 0;
    std::size_t printed_double = 0;
    for (int a1 = 0; a1 <= 5; ++a1) {
        for (int a2 = -5; a2 <= 5; ++a2) {
            const Weight alpha{a1, a2};
            if (!(alpha > Weight{0, 2})) continue;
            for (int i = 1; i <= 2; ++i) {
                ++total;
                if (evaluate_brackets(prop21_decompose(i, alpha)) == LieElt::basis(i, alpha)) ++exact;
                if (i == 2 && alpha[1] > 2) {
                    ++printed_cases;
                    if (evaluate_brackets(prop21_uncorrected(i, alpha)) == LieElt::basis(i, alpha, Scalar(2))) {
                        ++printed_double;
                    }
                }
            }
        }
    }
    if (c.json()) {
        emit(out, Json{{"decompositions", total},
                       {"exact", exact},
                       {"printed_i_eq_n_cases", printed_cases},
                       {"printed_i_eq_n_doubled", printed_double}});
    } else {
        out << "decompositions: " << exact << "/" << total << " reproduce d_i(alpha)\n";
        out << "two-bracket form with i = n: " << printed_double << "/" << printed_cases
            << " cases evaluate to 2*d_n(alpha)\n";
    }
    return exact == total ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the universal Whittaker module of Der A_2", "whit"};
    app.require_subcommand(1);
    Common common;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--psi", common.psi, "p1,p2,p3 or symbolic (default: WHIT_PSI, else symbolic)");
        sub->add_option("--threads", common.threads, "worker threads");
    };

    std::string x_text;
    std::string y_text;
    std::vector<std::string> vectors;
    std::string a_text;
    TruncFlags trunc;
    unsigned depth = 2;
    std::string target;
    std::optional<std::size_t> random;
    std::uint64_t seed = 1;
    bool strict = false;
    std::string omega_text;

    auto* bracket = app.add_subcommand("bracket", "Lie bracket [x, y]");
    bracket->add_option("x", x_text)->required();
    bracket->add_option("y", y_text)->required();

    auto* act = app.add_subcommand("act", "action of a Lie element on a vector");
    act->add_option("x", x_text)->required();
    act->add_option("v", y_text)->required();

    auto* nf = app.add_subcommand("nf", "PBW normal form of a vector");
    nf->add_option("v", y_text)->required();

    auto* wvectors = app.add_subcommand("wvectors", "Whittaker vectors of a truncated slice");
    trunc.attach(wvectors);

    auto* reduce = app.add_subcommand("reduce", "reduce a vector to a Whittaker polynomial");
    reduce->add_option("v", y_text)->required();

    auto* ideal = app.add_subcommand("ideal", "generator of the ideal of a submodule");
    ideal->add_option("gens", vectors)->required();
    ideal->add_option("--depth", depth, "search rounds");
    trunc.attach(ideal);

    auto* qact = app.add_subcommand("quotient-act", "action on the simple quotient L_{psi,a}");
    qact->add_option("x", x_text)->required();
    qact->add_option("v", y_text)->required();
    qact->add_option("--a", a_text, "the scalar a")->required();

    auto* probe = app.add_subcommand("probe", "reduce inside L_{psi,a}");
    probe->add_option("v", y_text)->required();
    probe->add_option("--a", a_text, "the scalar a")->required();

    auto* verify = app.add_subcommand("verify", "check reduction lemmas on instances");
    verify->add_option("target", target, "lemma id (3.5 .. 3.11.3, lemma3.8.1), all, or decompose")->required();
    verify->add_option("v", y_text, "instance vector (default: random instances)");
    verify->add_option("--omega", omega_text, "operator in Omega for lemma 3.5");
    verify->add_option("--random", random, "number of random instances per lemma");
    verify->add_option("--seed", seed, "random seed");
    verify->add_flag("--strict", strict, "fail on any mismatch with the stated formula, errata included");

    for (auto* sub : {bracket, act, nf, wvectors, reduce, ideal, qact, probe, verify}) add_common(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (common.format != "text" && common.format != "json") throw UsageError("--format is text or json");
        if (*bracket) {
            const LieElt r = whit::bracket(read_lie(x_text), read_lie(y_text));
            common.json() ? emit(out, to_json(r)) : void(out << format_lie(r) << '\n');
            return kOk;
        }
        if (*act || *nf || *qact) {
            const PsiSpec spec = resolve_psi(common, false);
            const WhittakerModule module(spec);
            ModuleVector v = read_vector(y_text, module);
            if (*act) v = module.act(read_lie(x_text), v);
            if (*qact) v = quotient_act(read_lie(x_text), project_to_quotient(v, parse_rational(a_text)),
                                        parse_rational(a_text), spec);
            common.json() ? emit(out, to_json(v)) : void(out << format_vector(v) << '\n');
            return kOk;
        }
        if (*wvectors) {
            const PsiSpec spec = resolve_psi(common, true);
            const auto basis = whittaker_space(trunc.build(), spec, common.threads);
            if (common.json()) {
                Json a = Json::array();
                for (const auto& v : basis) a.push_back(to_json(v));
                emit(out, a);
            } else {
                for (const auto& v : basis) out << format_vector(v) << '\n';
            }
            return kOk;
        }
        if (*reduce) {
            const PsiSpec spec = resolve_psi(common, false);
            const WhittakerModule module(spec);
            const Reduction red = reduce_to_whittaker(read_vector(y_text, module), spec);
            if (common.json()) {
                emit(out, Json{{"poly", to_json(red.poly)},
                               {"result", to_json(red.result)},
                               {"transcript", to_json(red.transcript)}});
            } else {
                out << "f = " << format_poly(red.poly) << '\n';
                for (const auto& s : red.transcript.steps) out << step_text(s) << '\n';
            }
            return kOk;
        }
        if (*ideal) {
            const PsiSpec spec = resolve_psi(common, true);
            const WhittakerModule module(spec);
            std::vector<ModuleVector> gens;
            for (const auto& t : vectors) gens.push_back(read_vector(t, module));
            const Truncation slice = trunc.given() ? trunc.build() : slice_for(gens);
            const SubmoduleResult res = submodule_generator(gens, slice, spec, depth);
            if (common.json()) {
                emit(out, Json{{"generator", to_json(res.generator)},
                               {"explored", res.explored},
                               {"stable", res.stable},
                               {"truncation", to_json(slice)}});
            } else {
                out << "g = " << format_poly(res.generator) << '\n';
                out << "explored " << res.explored << " vectors, " << (res.stable ? "stable" : "not stable")
                    << " within the slice\n";
            }
            return kOk;
        }
        if (*probe) {
            const PsiSpec spec = resolve_psi(common, true);
            const WhittakerModule module(spec);
            const Scalar c = simplicity_probe(read_vector(y_text, module), parse_rational(a_text), spec);
            common.json() ? emit(out, Json{{"c", to_json(c)}}) : void(out << "c = " << format_scalar(c) << '\n');
            return kOk;
        }
        if (*verify) {
            const PsiSpec spec = resolve_psi(common, false);
            if (target == "decompose") return cmd_verify_decompose(common, out);
            std::vector<LemmaId> ids;
            if (target == "all") {
                ids = all_lemmas();
            } else if (auto id = parse_lemma_name(target)) {
                ids.push_back(*id);
            } else {
                throw UsageError("unknown verify target '" + target + "'");
            }
            std::vector<LemmaReport> reports;
            if (!y_text.empty()) {
                if (ids.size() != 1) throw UsageError("an explicit instance needs a single lemma");
                const WhittakerModule module(spec);
                std::optional<Generator> omega;
                if (!omega_text.empty()) {
                    const LieElt o = parse_lie(omega_text);
                    if (o.terms().size() != 1 || !(o.terms().begin()->second == Scalar(1))) {
                        throw UsageError("--omega must be a single generator");
                    }
                    omega = o.terms().begin()->first;
                }
                reports.push_back(verify_lemma(LemmaInstance(ids[0], read_vector(y_text, module), omega), spec));
            } else {
                const std::size_t n = random.value_or(50);
                for (const LemmaId id : ids) {
                    for (const auto& inst : random_lemma_instances(id, n, seed)) reports.push_back(verify_lemma(inst, spec));
                }
            }

            bool ok = true;
            struct Tally {
                std::size_t instances = 0, match = 0, filtration = 0;
                std::map<std::string, std::size_t> errata;
            };
            std::map<LemmaId, Tally> tally;
            for (const auto& r : reports) {
                Tally& t = tally[r.lemma];
                ++t.instances;
                t.match += r.match;
                t.filtration += r.filtration_ok;
                for (const auto& e : r.errata) ++t.errata[e];
                ok = ok && (strict ? (r.match && r.filtration_ok) : r.accepted());
            }
            if (common.json()) {
                Json summary = Json::array();
                for (const auto& [id, t] : tally) {
                    Json errata = Json::object();
                    for (const auto& [e, n] : t.errata) errata[e] = n;
                    summary.push_back({{"lemma", lemma_name(id)},
                                       {"instances", t.instances},
                                       {"match", t.match},
                                       {"filtration_ok", t.filtration},
                                       {"errata", errata}});
                }
                Json list = Json::array();
                for (const auto& r : reports) list.push_back(to_json(r));
                emit(out, Json{{"ok", ok}, {"strict", strict}, {"summary", summary}, {"reports", list}});
            } else {
                for (const auto& [id, t] : tally) {
                    out << "lemma " << lemma_name(id) << ": " << t.instances << " instances, congruence "
                        << t.filtration << "/" << t.instances << ", statement " << t.match << "/" << t.instances;
                    for (const auto& [e, n] : t.errata) out << ", errata " << e << " x" << n;
                    out << '\n';
                }
                if (reports.size() == 1) {
                    const auto& r = reports.front();
                    out << "computed: " << format_vector(r.computed) << '\n';
                    out << "printed:  " << format_vector(r.printed) << '\n';
                    out << "modulo W" << format_triple(r.target) << '\n';
                }
                out << (ok ? "ok" : "MISMATCH") << '\n';
            }
            return ok ? kOk : kMismatch;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const SingularPsi& e) {
        err << "error: " << e.what() << '\n';
        return kSingularPsi;
    } catch (const InternalAssertion& e) {
        err << "internal assertion: " << e.what() << '\n';
        return kInternal;
    } catch (const NonTermination& e) {
        err << "internal assertion: " << e.what() << '\n';
        return kInternal;
    } catch (const ProbeFailed& e) {
        err << "probe failed: " << e.what() << '\n';
        return kMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace whit::cli
