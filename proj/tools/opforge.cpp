#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opforge/enumerate.hpp"
#include "opforge/idempotents.hpp"
#include "opforge/laws.hpp"
#include "opforge/solomon_tits.hpp"

using namespace opforge;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "opforge-report/1";

// Verification verbs return this when they find a violation.
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
    std::string operad_name;
    std::string law;
    std::string format = "text";
    std::string element;
    std::string op;
    std::string coop;
    std::string target = "(1,1,2)";
    std::vector<std::string> args;
    int bound = 0;
    int degree = 0;
    int max = 6;
    int generators = 2;
    std::uint64_t seed = 20240611;
    unsigned jobs = 0;
    bool inject_fault = false;
    bool variants = false;
    bool series = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

ordered_json header(const std::string& verb, const Options& o) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = verb;
    j["seed"] = o.seed;
    return j;
}

void emit(const Options& o, const ordered_json& j, const std::string& text) {
    if (json_out(o)) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

const OperadSpec& require_operad(const std::string& name) {
    const auto& names = operad_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const auto& n : names) known += " " + n;
        throw std::invalid_argument("unknown operad '" + name + "'; known:" + known);
    }
    return operad(name);
}

int positive(int v, const char* flag) {
    if (v < 1) throw std::invalid_argument(std::string(flag) + " must be positive");
    return v;
}

std::string str(const Scalar& s) { return format_scalar(s); }

int cmd_dims(const Options& o) {
    require_operad(o.operad_name);
    int top = positive(o.max, "--max");
    ordered_json j = header("dims", o);
    j["operad"] = o.operad_name;
    std::ostringstream text;
    for (int n = 1; n <= top; ++n) {
        std::size_t d = enumerate_basis(o.operad_name, n).size();
        j["dims"].push_back(d);
        text << (n > 1 ? " " : "") << d;
    }
    text << "\n";
    emit(o, j, text.str());
    return 0;
}

int cmd_eval(const Options& o) {
    const OperadSpec& spec = require_operad(o.operad_name);
    Element mu = parse_element(spec.kind, o.op.empty() ? o.element : o.op);
    std::vector<Vec> args;
    for (const auto& a : o.args) args.emplace_back(parse_element(spec.kind, a));
    Vec v = evaluate(o.operad_name, mu, args);
    ordered_json j = header("eval", o);
    j["operad"] = o.operad_name;
    j["operation"] = format(mu);
    j["args"] = o.args;
    j["value"] = format(v);
    emit(o, j, format(v) + "\n");
    return 0;
}

int cmd_coprod(const Options& o) {
    const OperadSpec& spec = require_operad(o.operad_name);
    Element x = parse_element(spec.kind, o.element);
    ordered_json j = header("coprod", o);
    j["operad"] = o.operad_name;
    j["element"] = format(x);
    std::ostringstream text;
    bool found = false;
    for (const auto& c : spec.cooperations) {
        if (!o.coop.empty() && c.name != o.coop) continue;
        found = true;
        TVec t = free_coproduct(o.operad_name, c.name, Vec(x));
        j["coproducts"][c.name] = format(t);
        text << c.name << ": " << format(t) << "\n";
    }
    if (!found) throw std::invalid_argument("no cooperation '" + o.coop + "' in " + o.operad_name);
    emit(o, j, text.str());
    return 0;
}

int cmd_idem(const Options& o) {
    const OperadSpec& spec = require_operad(o.operad_name);
    Element x = parse_element(spec.kind, o.element);
    int bound = o.degree > 0 ? o.degree : std::max(1, degree(x));
    Vec v = o.series ? series_idempotent(o.operad_name, Vec(x)) : inductive_idempotent(IdempotentPlan(o.operad_name, bound), Vec(x));
    ordered_json j = header("idem", o);
    j["operad"] = o.operad_name;
    j["element"] = format(x);
    j["method"] = o.series ? "series" : "inductive";
    j["value"] = format(v);
    emit(o, j, format(v) + "\n");
    return 0;
}

ordered_json law_json(const LawReport& r) {
    ordered_json j;
    j["law"] = r.id;
    j["bound"] = r.bound;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"model", c.model}, {"cooperation", c.coop}, {"operation", c.op},
                               {"args", c.args},   {"lhs", c.lhs},          {"rhs", c.rhs},
                               {"diff", c.diff}};
    }
    return j;
}

std::string law_text(const LawReport& r) {
    std::ostringstream out;
    out << r.id << " bound " << r.bound << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checked << " checks)\n";
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out << "  model " << c.model << ", " << c.coop << " after " << c.op << " on";
        for (const auto& a : c.args) out << " " << a;
        out << "\n  lhs  " << c.lhs << "\n  rhs  " << c.rhs << "\n  diff " << c.diff << "\n";
    }
    return out.str();
}

int cmd_check_law(const Options& o) {
    if (o.law.empty()) throw std::invalid_argument("--law is required");
    int bound = o.bound > 0 ? o.bound : 6;
    if (bound < 2) throw std::invalid_argument("--bound must be at least 2");
    std::vector<LawEntry> entries;
    if (o.law == "all") {
        for (const auto& id : law_ids(o.variants)) entries.push_back(find_law(id));
    } else {
        entries.push_back(find_law(o.law));
    }
    CheckOptions opts;
    opts.jobs = o.jobs > 0 ? o.jobs : default_jobs();
    ordered_json j = header("check-law", o);
    j["inject_fault"] = o.inject_fault;
    std::string text;
    bool all_pass = true;
    for (auto e : entries) {
        if (o.inject_fault) {
            // Subtract args[0] (x) args[1] from the right side.
            LawRhs inner = e.rhs;
            e.rhs = [inner](const LawContext& L, const std::string& coop, const std::string& op, const std::vector<Vec>& a) {
                TVec t = inner(L, coop, op, a);
                if (a.size() >= 2) t -= tensor(a[0], a[1]);
                return t;
            };
        }
        LawReport r = check_law(e, bound, opts);
        all_pass = all_pass && r.pass;
        j["reports"].push_back(law_json(r));
        text += law_text(r);
    }
    j["pass"] = all_pass;
    emit(o, j, text);
    return all_pass ? 0 : kViolation;
}

int cmd_check_basis(const Options& o) {
    require_operad(o.operad_name);
    int bound = positive(o.bound > 0 ? o.bound : 4, "--bound");
    BasisReport r = check_compatible_basis(o.operad_name, bound);
    ordered_json j = header("check-basis", o);
    j["operad"] = r.operad;
    j["max_arity"] = r.max_arity;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    if (!r.pass) j["failure"] = r.failure;
    std::ostringstream text;
    text << r.operad << " arity <= " << r.max_arity << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checked << " checks)\n";
    if (!r.pass) text << "  " << r.failure << "\n";
    emit(o, j, text.str());
    return r.pass ? 0 : kViolation;
}

int cmd_primitives(const Options& o) {
    const OperadSpec& spec = require_operad(o.operad_name);
    int bound = positive(o.degree > 0 ? o.degree : 3, "--degree");
    GradedModel model = spec.free_model ? free_graded_model(o.operad_name, positive(o.generators, "--generators"), bound)
                                        : labelled_graded_model(o.operad_name, bound);
    auto prims = extract_primitives(model);
    ordered_json j = header("primitives", o);
    j["operad"] = o.operad_name;
    j["model"] = spec.free_model ? "free" : "labelled";
    if (spec.free_model) j["generators"] = o.generators;
    std::ostringstream text;
    for (const auto& [d, vs] : prims) {
        ordered_json row;
        row["degree"] = d;
        row["component_dim"] = model.basis(d).size();
        row["primitive_dim"] = vs.size();
        text << "degree " << d << ": " << vs.size() << " of " << model.basis(d).size() << "\n";
        for (const auto& v : vs) {
            row["basis"].push_back(format(v));
            text << "  " << format(v) << "\n";
        }
        j["degrees"].push_back(row);
    }
    emit(o, j, text.str());
    return 0;
}

int cmd_roundtrip(const Options& o) {
    require_operad(o.operad_name);
    int bound = positive(o.degree > 0 ? o.degree : 4, "--degree");
    RigidityReport r = rigidity_roundtrip(o.operad_name, positive(o.generators, "--generators"), bound);
    ordered_json j = header("roundtrip", o);
    j["operad"] = r.operad;
    j["generators"] = r.generators;
    j["degree"] = r.bound;
    j["component_dims"] = r.component_dims;
    std::ostringstream text;
    text << r.operad << " on " << r.generators << " generators to degree " << r.bound << "\n";
    text << "  component dims:";
    for (auto d : r.component_dims) text << " " << d;
    text << "\n";
    for (const auto& row : r.filtration) {
        j["filtration"].push_back({{"n", row.n}, {"dim_F", row.dim_f}, {"dim_F_prev", row.dim_f_prev}, {"dim_M", row.dim_m}, {"ok", row.ok()}});
        text << "  dim F_" << row.n << " = " << row.dim_f << " = " << row.dim_f_prev << " + " << row.dim_m << (row.ok() ? "" : "  MISMATCH") << "\n";
    }
    j["primitive_dim"] = r.primitive_dim;
    j["checks"] = {{"decomposition", r.decomposition},
                   {"primitives_are_generators", r.primitives_are_generators},
                   {"image_is_primitive", r.image_is_primitive},
                   {"generated", r.generated},
                   {"kills_coproducts", r.idempotent.kills_coproducts},
                   {"idempotent", r.idempotent.idempotent},
                   {"identity_on_generators", r.idempotent.identity_on_generators},
                   {"vanishes_on_products", r.idempotent.vanishes_on_products}};
    j["pass"] = r.pass();
    if (!r.pass()) j["failure"] = r.failure;
    text << "  primitives: " << r.primitive_dim << "\n  " << (r.pass() ? "PASS" : "FAIL: " + r.failure) << "\n";
    emit(o, j, text.str());
    return r.pass() ? 0 : kViolation;
}

int cmd_st_demo(const Options& o) {
    Element parsed = parse_element(BasisKind::Surjection, o.target);
    const Surjection& target = std::get<Surjection>(parsed);
    int bound = o.bound > 0 ? o.bound : static_cast<int>(target.values.size());
    NongenerationReport r = nongeneration_certificate(target, bound);
    HopfReport h = check_st_hopf(4);
    const char* verdict = r.generated ? "GENERATED" : "NOT-GENERATED";
    ordered_json j = header("st-demo", o);
    j["target"] = format(parsed);
    j["bound"] = r.bound;
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        const auto& d = r.degrees[i];
        ordered_json row = {{"degree", d.degree}, {"dim", d.dim}, {"primitive_dim", d.primitive_dim}, {"generated_dim", d.generated_dim}};
        for (const auto& p : r.primitive_bases[i]) {
            std::ostringstream s;
            bool first = true;
            for (const auto& [x, c] : p) {
                s << (first ? "" : " + ") << str(c) << " " << format(Element(x));
                first = false;
            }
            row["primitives"].push_back(s.str());
        }
        j["degrees"].push_back(row);
    }
    j["span_rank"] = r.span_rank;
    j["span_rank_with_target"] = r.span_rank_with_target;
    j["verdict"] = verdict;
    j["hopf_law"] = {{"bound", h.bound}, {"checked", h.checked}, {"pass", h.pass}};
    std::ostringstream text;
    for (const auto& d : r.degrees)
        text << "degree " << d.degree << ": dim " << d.dim << ", primitives " << d.primitive_dim << ", generated " << d.generated_dim << "\n";
    text << "target " << format(parsed) << ": rank " << r.span_rank << " -> " << r.span_rank_with_target << " with target\n";
    text << "hopf law n+m<=4: " << (h.pass ? "PASS" : "FAIL") << " (" << h.checked << " pairs)\n";
    text << verdict << "\n";
    emit(o, j, text.str());
    return h.pass ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operads, confluence laws and rigidity checks"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "Seed recorded in reports");
        sub->add_option("--jobs", o.jobs, "Worker threads (default OPERAD_FORGE_JOBS or 1)");
    };

    auto* dims = app.add_subcommand("dims", "Basis dimensions of A(1..max)");
    dims->add_option("--operad", o.operad_name)->required();
    dims->add_option("--max", o.max, "Largest arity");
    common(dims);

    auto* ev = app.add_subcommand("eval", "Evaluate a basis operation on basis elements");
    ev->add_option("--operad", o.operad_name)->required();
    ev->add_option("--op", o.op, "Operation in A(n)")->required();
    ev->add_option("--arg", o.args, "Argument, once per slot");
    common(ev);

    auto* co = app.add_subcommand("coprod", "Dual coproducts of an element");
    co->add_option("--operad", o.operad_name)->required();
    co->add_option("--element", o.element)->required();
    co->add_option("--coop", o.coop, "Restrict to one cooperation");
    common(co);

    auto* id = app.add_subcommand("idem", "Apply the idempotent onto primitives");
    id->add_option("--operad", o.operad_name)->required();
    id->add_option("--element", o.element)->required();
    id->add_option("--degree", o.degree, "Degree bound of the inductive plan");
    id->add_flag("--series", o.series, "Use the closed-form series (perm, nap, pan)");
    common(id);

    auto* cl = app.add_subcommand("check-law", "Check a catalogued law against the duality oracle");
    cl->add_option("--law", o.law, "Law id, or all")->required();
    cl->add_option("--bound", o.bound, "Maximal total arity (default 6)");
    cl->add_flag("--inject-fault", o.inject_fault, "Subtract args[0] (x) args[1] from the right side");
    cl->add_flag("--variants", o.variants, "With --law all, include the literal and faulty variants");
    common(cl);

    auto* cb = app.add_subcommand("check-basis", "Compatible-basis criterion");
    cb->add_option("--operad", o.operad_name)->required();
    cb->add_option("--bound", o.bound, "Maximal arity (default 4)");
    common(cb);

    auto* pr = app.add_subcommand("primitives", "Exact primitive spaces per degree");
    pr->add_option("--operad", o.operad_name)->required();
    pr->add_option("--degree", o.degree, "Degree bound (default 3)");
    pr->add_option("--generators", o.generators, "Number of generators of a free model");
    common(pr);

    auto* rt = app.add_subcommand("roundtrip", "Rigidity round trip on a free algebra");
    rt->add_option("--operad", o.operad_name)->required();
    rt->add_option("--degree", o.degree, "Degree bound (default 4)");
    rt->add_option("--generators", o.generators, "Number of generators");
    common(rt);

    auto* st = app.add_subcommand("st-demo", "Solomon-Tits non-generation certificate");
    st->add_option("--target", o.target, "Surjection, e.g. (1,1,2)");
    st->add_option("--bound", o.bound, "Degree bound (default: target degree)");
    common(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*dims) return cmd_dims(o);
        if (*ev) return cmd_eval(o);
        if (*co) return cmd_coprod(o);
        if (*id) return cmd_idem(o);
        if (*cl) return cmd_check_law(o);
        if (*cb) return cmd_check_basis(o);
        if (*pr) return cmd_primitives(o);
        if (*rt) return cmd_roundtrip(o);
        if (*st) return cmd_st_demo(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid element: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
