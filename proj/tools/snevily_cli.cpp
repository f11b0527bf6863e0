// Command-line front end: witnesses and sweeps for the common-character-basis
// theorems, the distinguished-permutation lemma, and the Snevily permutation.
//
// Exit codes: 0 success, 1 property violation (counterexample printed),
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "snevily/io.hpp"
#include "snevily/matroid.hpp"
#include "snevily/snevily.hpp"
#include "snevily/sweeps.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace snevily;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "text";
};

void add_format_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag_callback(
        "--json", [&out]() { out.format = "json"; }, "Shorthand for --format json");
}

void emit(const OutputOptions& out, const ojson& j, const std::vector<std::string>& text) {
    if (out.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        for (const auto& line : text) {
            std::string esc;
            for (char ch : line) {
                esc += ch;
                if (ch == '"') esc += '"';
            }
            std::cout << '"' << esc << "\"\n";
        }
    } else {
        for (const auto& line : text) std::cout << line << "\n";
    }
}

ojson element_json(const GroupElement& g) {
    ojson a = ojson::array();
    for (auto c : g) a.push_back(c);
    return a;
}

ojson element_list_json(const std::vector<GroupElement>& list) {
    ojson a = ojson::array();
    for (const auto& g : list) a.push_back(element_json(g));
    return a;
}

ojson signature_json(const MultisetSignature& sig) {
    ojson a = ojson::array();
    for (auto v : sig) a.push_back(v);
    return a;
}

std::string signature_key(const MultisetSignature& sig) {
    std::string s = "[";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(sig[i]);
    }
    return s + "]";
}

ojson poly_json(const SnevilyPolynomial& poly) {
    ojson j = ojson::object();
    for (const auto& [sig, c] : poly.coeff) j[signature_key(sig)] = c;
    return j;
}

int emit_report(const OutputOptions& out, const SweepReport& rep) {
    ojson j;
    j["suite"] = rep.suite;
    j["instances"] = rep.instances;
    j["violations"] = rep.violations;
    j["lines"] = rep.lines;
    std::vector<std::string> text = rep.lines;
    text.push_back(rep.summary());
    emit(out, j, text);
    return rep.ok() ? kExitOk : kExitViolation;
}

struct InstanceArgs {
    std::string group;
    std::string field = "cyc";
    std::string set_a;
    std::string set_b;
};

// ---------------------------------------------------------------- group info

int run_group_info(const std::string& group_text, const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(group_text);
    ojson j;
    j["group"] = format_group_spec(spec);
    j["order"] = spec.order();
    j["exponent"] = spec.exponent();
    j["elements"] = element_list_json(spec.enumerate());
    std::vector<std::string> text;
    text.push_back("order " + std::to_string(spec.order()) + ", exponent " +
                   std::to_string(spec.exponent()));
    text.push_back("elements " + format_element_list(spec.enumerate()));
    emit(out, j, text);
    return kExitOk;
}

// ---------------------------------------------------------------- field build

int run_field_build(const std::string& group_text, const std::string& field_text,
                    const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(group_text);
    const FieldSpec fs = parse_field_spec(field_text);
    ojson j;
    std::vector<std::string> text;
    if (fs.kind == FieldSpec::Kind::finite) {
        const PrimePowerField f(fs.characteristic, spec.exponent());
        std::string mod = "[";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) {
            if (i) mod += ',';
            mod += std::to_string(f.modulus()[i]);
        }
        mod += "]";
        j["field"] = f.describe();
        j["characteristic"] = f.characteristic();
        j["degree"] = f.degree();
        j["size"] = f.field_size();
        j["rootOrder"] = f.root_order();
        j["modulus"] = mod;
        j["zeta"] = f.to_string(f.zeta());
        text.push_back("field " + f.describe());
        text.push_back("characteristic " + std::to_string(f.characteristic()));
        text.push_back("degree " + std::to_string(f.degree()));
        text.push_back("size " + std::to_string(f.field_size()));
        text.push_back("modulus " + mod);
        text.push_back("zeta " + f.to_string(f.zeta()));
    } else {
        const CyclotomicField f(spec.exponent());
        std::string mod = "[";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) {
            if (i) mod += ',';
            mod += f.modulus()[i].get_str();
        }
        mod += "]";
        j["field"] = f.describe();
        j["characteristic"] = 0;
        j["degree"] = f.degree();
        j["rootOrder"] = f.root_order();
        j["cyclotomic"] = mod;
        j["zeta"] = f.to_string(f.zeta());
        text.push_back("field " + f.describe());
        text.push_back("characteristic 0");
        text.push_back("degree " + std::to_string(f.degree()));
        text.push_back("cyclotomic " + mod);
        text.push_back("zeta " + f.to_string(f.zeta()));
    }
    emit(out, j, text);
    return kExitOk;
}

// ----------------------------------------------------------------- chartable

int run_chartable(const InstanceArgs& args, const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const FieldSpec fs = parse_field_spec(args.field);
    return with_field(fs, spec, [&](const auto& f) {
        const auto table = character_table(f, spec);
        const auto det = determinant(f, table);
        const bool nonsingular = !f.is_zero(det);
        ojson j;
        j["group"] = format_group_spec(spec);
        j["field"] = f.describe();
        ojson rows = ojson::array();
        std::vector<std::string> text;
        for (std::size_t r = 0; r < table.rows; ++r) {
            ojson row = ojson::array();
            std::string line;
            for (std::size_t c = 0; c < table.cols; ++c) {
                row.push_back(f.to_string(table.at(r, c)));
                if (c) line += ' ';
                line += f.to_string(table.at(r, c));
            }
            rows.push_back(row);
            text.push_back(line);
        }
        j["table"] = rows;
        j["determinant"] = f.to_string(det);
        j["nonsingular"] = nonsingular;
        text.push_back("determinant " + f.to_string(det));
        text.push_back(std::string("nonsingular ") + (nonsingular ? "true" : "false"));
        emit(out, j, text);
        return nonsingular ? kExitOk : kExitViolation;
    });
}

// ------------------------------------------------------------------ theorem1

int run_theorem1(const InstanceArgs& args, const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const FieldSpec fs = parse_field_spec(args.field);
    const auto a = parse_element_list(spec, args.set_a);
    const auto b = parse_element_list(spec, args.set_b);
    return with_field(fs, spec, [&](const auto& f) {
        const auto witness = theorem1_witness(f, spec, a, b);
        if (!witness) {
            std::cout << "infeasible\n";
            return kExitViolation;
        }
        const bool verified = verify_theorem1_witness(f, spec, a, b, witness->chars);
        ojson j;
        j["characters"] = element_list_json(witness->chars);
        j["detA"] = f.to_string(witness->det_a);
        j["detB"] = f.to_string(witness->det_b);
        j["verified"] = verified;
        std::vector<std::string> text;
        text.push_back("characters " + format_element_list(witness->chars));
        text.push_back("detA " + f.to_string(witness->det_a));
        text.push_back("detB " + f.to_string(witness->det_b));
        text.push_back(std::string("verified ") + (verified ? "true" : "false"));
        emit(out, j, text);
        return verified ? kExitOk : kExitViolation;
    });
}

// ------------------------------------------------------------------ theorem2

int run_theorem2(const std::string& group_text, const std::string& field_text,
                 const std::string& chars_x_text, const std::string& chars_psi_text,
                 const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(group_text);
    const FieldSpec fs = parse_field_spec(field_text);
    const auto chars_x = parse_element_list(spec, chars_x_text);
    const auto chars_psi = parse_element_list(spec, chars_psi_text);
    return with_field(fs, spec, [&](const auto& f) {
        const auto witness = dual_witness(f, spec, chars_x, chars_psi);
        if (!witness) {
            std::cout << "infeasible\n";
            return kExitViolation;
        }
        const auto det_x = determinant(f, char_matrix(f, spec, chars_x, *witness));
        const auto det_psi = determinant(f, char_matrix(f, spec, chars_psi, *witness));
        const bool verified = !f.is_zero(det_x) && !f.is_zero(det_psi);
        ojson j;
        j["elements"] = element_list_json(*witness);
        j["detX"] = f.to_string(det_x);
        j["detPsi"] = f.to_string(det_psi);
        j["verified"] = verified;
        std::vector<std::string> text;
        text.push_back("elements " + format_element_list(*witness));
        text.push_back("detX " + f.to_string(det_x));
        text.push_back("detPsi " + f.to_string(det_psi));
        text.push_back(std::string("verified ") + (verified ? "true" : "false"));
        emit(out, j, text);
        return verified ? kExitOk : kExitViolation;
    });
}

// -------------------------------------------------------------------- lemma4

int run_lemma4(const InstanceArgs& args, unsigned max_perm_k, const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const auto a = parse_element_list(spec, args.set_a);
    const auto b = parse_element_list(spec, args.set_b);
    const Permutation pi = lemma4_permutation(spec, a, b);
    const MultisetSignature sig = multiset_signature(spec, a, b, pi);
    const std::uint64_t attaining = count_attaining(spec, a, b, sig, max_perm_k);
    ojson j;
    ojson pj = ojson::array();
    for (auto v : pi.map) pj.push_back(v);
    j["pi"] = pj;
    j["signature"] = signature_json(sig);
    j["attaining"] = attaining;
    j["unique"] = attaining == 1;
    std::vector<std::string> text;
    std::string pline = "pi [";
    for (std::size_t i = 0; i < pi.map.size(); ++i) {
        if (i) pline += ',';
        pline += std::to_string(pi.map[i]);
    }
    text.push_back(pline + "]");
    text.push_back("signature " + signature_key(sig));
    text.push_back("attaining " + std::to_string(attaining));
    text.push_back(std::string("unique ") + (attaining == 1 ? "true" : "false"));
    emit(out, j, text);
    return attaining == 1 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------- snevily

int run_snevily(const InstanceArgs& args, const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const auto a = parse_element_list(spec, args.set_a);
    const auto b = parse_element_list(spec, args.set_b);
    const auto pi = find_snevily_permutation(spec, a, b);
    ojson j;
    std::vector<std::string> text;
    if (!pi) {
        j["pi"] = nullptr;
        text.push_back("none");
    } else {
        ojson pj = ojson::array();
        std::string pline = "[";
        for (std::size_t i = 0; i < pi->map.size(); ++i) {
            pj.push_back(pi->map[i]);
            if (i) pline += ',';
            pline += std::to_string(pi->map[i]);
        }
        j["pi"] = pj;
        text.push_back(pline + "]");
    }
    emit(out, j, text);
    return kExitOk;
}

// ---------------------------------------------------------------------- poly

int run_poly(const InstanceArgs& args, std::uint64_t mod_c, unsigned max_perm_k,
             const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const auto a = parse_element_list(spec, args.set_a);
    const auto b = parse_element_list(spec, args.set_b);
    SnevilyPolynomial poly = snevily_polynomial(spec, a, b, max_perm_k);
    if (mod_c != 0) poly = reduce_mod_char(poly, mod_c);
    const ojson j = poly_json(poly);
    emit(out, j, {j.dump()});
    return kExitOk;
}

// ------------------------------------------------------------ verify witness

int run_verify_witness(const InstanceArgs& args, const std::string& witness_path,
                       const OutputOptions& out) {
    const GroupSpec spec = parse_group_spec(args.group);
    const FieldSpec fs = parse_field_spec(args.field);
    const auto a = parse_element_list(spec, args.set_a);
    const auto b = parse_element_list(spec, args.set_b);
    ojson w;
    if (witness_path == "-") {
        w = ojson::parse(std::cin);
    } else {
        std::ifstream in(witness_path);
        if (!in) throw std::invalid_argument("verify witness: cannot open " + witness_path);
        w = ojson::parse(in);
    }
    if (!w.contains("characters"))
        throw std::invalid_argument("verify witness: missing \"characters\" key");
    std::vector<Character> chars;
    for (const auto& cj : w["characters"]) {
        Character u;
        for (const auto& c : cj) u.push_back(c.get<std::uint64_t>());
        spec.require_valid(u);
        chars.push_back(std::move(u));
    }
    return with_field(fs, spec, [&](const auto& f) {
        const bool verified = verify_theorem1_witness(f, spec, a, b, chars);
        ojson j;
        j["verified"] = verified;
        emit(out, j, {std::string("verified ") + (verified ? "true" : "false")});
        return verified ? kExitOk : kExitViolation;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact witnesses for common character bases and Snevily permutations"};
    app.require_subcommand(1);

    OutputOptions out;

    // group info
    auto* group_cmd = app.add_subcommand("group", "Group inspection");
    group_cmd->require_subcommand(1);
    auto* info_cmd = group_cmd->add_subcommand("info", "Order, exponent and enumeration");
    std::string info_group;
    info_cmd->add_option("--group", info_group, "Comma-separated moduli, e.g. 2,3,9")
        ->required();
    add_format_flags(info_cmd, out);

    // field build
    auto* field_cmd = app.add_subcommand("field", "Field backends");
    field_cmd->require_subcommand(1);
    auto* build_cmd = field_cmd->add_subcommand("build", "Construct the field context");
    InstanceArgs build_args;
    build_cmd->add_option("--group", build_args.group, "Group moduli")->required();
    build_cmd->add_option("--field", build_args.field, "Field spec: gf:p or cyc")->required();
    add_format_flags(build_cmd, out);

    // chartable
    auto* chartable_cmd = app.add_subcommand("chartable", "Character table and determinant");
    InstanceArgs chartable_args;
    chartable_cmd->add_option("--group", chartable_args.group, "Group moduli")->required();
    chartable_cmd->add_option("--field", chartable_args.field, "Field spec")->required();
    add_format_flags(chartable_cmd, out);

    // theorem1
    auto* t1_cmd = app.add_subcommand("theorem1", "Common character basis witness");
    InstanceArgs t1_args;
    t1_cmd->add_option("--group", t1_args.group, "Group moduli")->required();
    t1_cmd->add_option("--field", t1_args.field, "Field spec")->required();
    t1_cmd->add_option("--set-a", t1_args.set_a, "Subset A, e.g. \"(0);(1)\"")->required();
    t1_cmd->add_option("--set-b", t1_args.set_b, "Subset B")->required();
    add_format_flags(t1_cmd, out);

    // theorem2
    auto* t2_cmd = app.add_subcommand("theorem2", "Dual witness: common element basis");
    InstanceArgs t2_args;
    std::string chars_x, chars_psi;
    t2_cmd->add_option("--group", t2_args.group, "Group moduli")->required();
    t2_cmd->add_option("--field", t2_args.field, "Field spec")->required();
    t2_cmd->add_option("--chars-x", chars_x, "Character set X")->required();
    t2_cmd->add_option("--chars-psi", chars_psi, "Character set Psi")->required();
    add_format_flags(t2_cmd, out);

    // lemma4
    auto* l4_cmd = app.add_subcommand("lemma4", "Distinguished permutation and uniqueness");
    InstanceArgs l4_args;
    unsigned l4_max_perm_k = 8;
    l4_cmd->add_option("--group", l4_args.group, "Group moduli")->required();
    l4_cmd->add_option("--set-a", l4_args.set_a, "Subset A")->required();
    l4_cmd->add_option("--set-b", l4_args.set_b, "Subset B")->required();
    l4_cmd->add_option("--max-perm-k", l4_max_perm_k, "Backtracking bound on k")
        ->capture_default_str();
    add_format_flags(l4_cmd, out);

    // snevily
    auto* sn_cmd = app.add_subcommand("snevily", "Permutation with pairwise distinct sums");
    InstanceArgs sn_args;
    sn_cmd->add_option("--group", sn_args.group, "Group moduli")->required();
    sn_cmd->add_option("--set-a", sn_args.set_a, "Subset A")->required();
    sn_cmd->add_option("--set-b", sn_args.set_b, "Subset B")->required();
    add_format_flags(sn_cmd, out);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Snevily polynomial (Det L over F(t_1..t_m))");
    InstanceArgs poly_args;
    std::uint64_t poly_mod = 0;
    unsigned poly_max_perm_k = 8;
    poly_cmd->add_option("--group", poly_args.group, "Group moduli")->required();
    poly_cmd->add_option("--set-a", poly_args.set_a, "Subset A")->required();
    poly_cmd->add_option("--set-b", poly_args.set_b, "Subset B")->required();
    poly_cmd->add_option("--mod", poly_mod, "Reduce coefficients modulo this prime")
        ->capture_default_str();
    poly_cmd->add_option("--max-perm-k", poly_max_perm_k, "Enumeration bound on k")
        ->capture_default_str();
    add_format_flags(poly_cmd, out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Identity checks and witness re-verification");
    verify_cmd->require_subcommand(1);
    SweepOptions verify_opts;
    verify_opts.trials = 100;
    auto* cb_cmd = verify_cmd->add_subcommand("cauchy-binet", "Cauchy-Binet identity trials");
    cb_cmd->add_option("--trials", verify_opts.trials, "Trial count")->capture_default_str();
    cb_cmd->add_option("--seed", verify_opts.seed, "RNG seed")->capture_default_str();
    cb_cmd->add_option("--max-m", verify_opts.max_m, "Group order bound")->capture_default_str();
    cb_cmd->add_option("--max-k", verify_opts.max_k, "Subset size bound")->capture_default_str();
    add_format_flags(cb_cmd, out);
    auto* c2_cmd = verify_cmd->add_subcommand("char2", "Characteristic-2 identity trials");
    c2_cmd->add_option("--trials", verify_opts.trials, "Trial count")->capture_default_str();
    c2_cmd->add_option("--seed", verify_opts.seed, "RNG seed")->capture_default_str();
    c2_cmd->add_option("--max-m", verify_opts.max_m, "Group order bound")->capture_default_str();
    c2_cmd->add_option("--max-k", verify_opts.max_k, "Subset size bound")->capture_default_str();
    add_format_flags(c2_cmd, out);
    auto* vw_cmd = verify_cmd->add_subcommand("witness", "Re-verify a theorem1 witness JSON");
    InstanceArgs vw_args;
    std::string witness_path = "-";
    vw_cmd->add_option("--group", vw_args.group, "Group moduli")->required();
    vw_cmd->add_option("--field", vw_args.field, "Field spec")->required();
    vw_cmd->add_option("--set-a", vw_args.set_a, "Subset A")->required();
    vw_cmd->add_option("--set-b", vw_args.set_b, "Subset B")->required();
    vw_cmd->add_option("--witness", witness_path, "Witness JSON path, or - for stdin")
        ->capture_default_str();
    add_format_flags(vw_cmd, out);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Acceptance sweeps");
    std::string suite;
    constexpr std::uint64_t kUnsetU64 = UINT64_MAX;
    SweepOptions sweep_opts;
    std::uint64_t sw_max_m = kUnsetU64, sw_max_k = kUnsetU64, sw_trials = kUnsetU64;
    std::uint64_t sw_rand_max_m = kUnsetU64, sw_rand_max_k = kUnsetU64;
    sweep_cmd->add_option("--suite", suite, "lemma4, theorem1, theorem3 or identities")
        ->required()
        ->check(CLI::IsMember({"lemma4", "theorem1", "theorem3", "identities"}));
    sweep_cmd->add_option("--max-m", sw_max_m, "Exhaustive group order bound");
    sweep_cmd->add_option("--max-k", sw_max_k, "Exhaustive subset size bound");
    sweep_cmd->add_option("--trials", sw_trials, "Random phase trial count");
    sweep_cmd->add_option("--seed", sweep_opts.seed, "RNG seed")->capture_default_str();
    sweep_cmd->add_option("--rand-max-m", sw_rand_max_m, "Random phase order bound");
    sweep_cmd->add_option("--rand-max-k", sw_rand_max_k, "Random phase size bound");
    sweep_cmd->add_option("--max-subsets", sweep_opts.max_subsets, "Subset budget")
        ->capture_default_str();
    sweep_cmd->add_option("--max-perm-k", sweep_opts.max_perm_k, "Permutation budget on k")
        ->capture_default_str();
    add_format_flags(sweep_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (info_cmd->parsed()) return run_group_info(info_group, out);
        if (build_cmd->parsed()) return run_field_build(build_args.group, build_args.field, out);
        if (chartable_cmd->parsed()) return run_chartable(chartable_args, out);
        if (t1_cmd->parsed()) return run_theorem1(t1_args, out);
        if (t2_cmd->parsed())
            return run_theorem2(t2_args.group, t2_args.field, chars_x, chars_psi, out);
        if (l4_cmd->parsed()) return run_lemma4(l4_args, l4_max_perm_k, out);
        if (sn_cmd->parsed()) return run_snevily(sn_args, out);
        if (poly_cmd->parsed()) return run_poly(poly_args, poly_mod, poly_max_perm_k, out);
        if (cb_cmd->parsed()) return emit_report(out, sweep_cauchy_binet(verify_opts));
        if (c2_cmd->parsed()) return emit_report(out, sweep_char2(verify_opts));
        if (vw_cmd->parsed()) return run_verify_witness(vw_args, witness_path, out);
        if (sweep_cmd->parsed()) {
            // Suite defaults follow the acceptance sweeps; explicit flags win.
            std::uint64_t def_m = 9, def_k = 3, def_trials = 0, def_rand_m = 36,
                          def_rand_k = 5;
            if (suite == "lemma4") {
                def_m = 15;
                def_k = 4;
            } else if (suite == "theorem1") {
                def_trials = 500;
            } else if (suite == "theorem3") {
                def_m = 15;
                def_trials = 500;
                def_rand_m = 81;
            } else {
                def_trials = 100;
            }
            sweep_opts.max_m = sw_max_m == kUnsetU64 ? def_m : sw_max_m;
            sweep_opts.max_k = sw_max_k == kUnsetU64 ? def_k : sw_max_k;
            sweep_opts.trials = sw_trials == kUnsetU64 ? def_trials : sw_trials;
            sweep_opts.rand_max_m = sw_rand_max_m == kUnsetU64 ? def_rand_m : sw_rand_max_m;
            sweep_opts.rand_max_k = sw_rand_max_k == kUnsetU64 ? def_rand_k : sw_rand_max_k;
            if (suite == "lemma4") return emit_report(out, sweep_lemma4(sweep_opts));
            if (suite == "theorem1") return emit_report(out, sweep_theorem1(sweep_opts));
            if (suite == "theorem3") return emit_report(out, sweep_theorem3(sweep_opts));
            return emit_report(out, sweep_identities(sweep_opts));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
