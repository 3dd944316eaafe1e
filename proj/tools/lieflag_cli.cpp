// Command line front end: every decision procedure of the library behind a
// subcommand, with a line-oriented key:value report (or JSON with --json).
//
// Exit codes: 0 when a decision was reached, 2 on input errors, 3 when the
// input has a shape without a decision procedure or a matrix model.
#include "lieflag/errors.hpp"
#include "lieflag/flag_classifier.hpp"
#include "lieflag/joseph_bounded.hpp"
#include "lieflag/parse.hpp"
#include "lieflag/partition_orbits.hpp"
#include "lieflag/quiver_ps.hpp"
#include "lieflag/spherical_table.hpp"
#include "lieflag/sphericity_oracle.hpp"
#include "lieflag/tuples_weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace lieflag;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitDecision = 0;
constexpr int kExitInput = 2;
constexpr int kExitShape = 3;

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

// Flattens nested objects and arrays into "a.b[2].c: value" lines.
void print_flat(std::ostream& os, const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_flat(os, v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
        if (scalars) {
            os << prefix << ":";
            for (const Json& x : j) os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
            os << "\n";
        } else {
            for (size_t i = 0; i < j.size(); ++i) print_flat(os, j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Options {
    bool json = false;
    std::uint64_t seed = 20240611;
    int samples = 5;
    long box = 10000;

    OracleConfig oracle() const { return {samples, seed, box}; }
};

Json oracle_json(const OracleVerdict& v) {
    Json j;
    j["verdict"] = v.spherical ? "Yes" : "ProbablyNo";
    j["max_rank"] = v.max_rank;
    j["variety_dim"] = v.variety_dim;
    j["complexity_bound"] = v.complexity();
    j["samples_used"] = v.samples_used;
    j["sample_ranks"] = v.sample_ranks;
    j["seed"] = v.config.seed;
    j["samples"] = v.config.samples;
    j["box"] = v.config.box;
    return j;
}

const char* kind_name(DecreasingKind k) {
    switch (k) {
        case DecreasingKind::Decreasing: return "Decreasing";
        case DecreasingKind::SemiDecreasing: return "SemiDecreasing";
        default: return "Neither";
    }
}

WKind parse_wkind(const std::string& s) {
    if (s == "sym2") return WKind::Sym2;
    if (s == "wedge2") return WKind::Wedge2;
    throw Error(ErrorKind::ParseError, "expected sym2 or wedge2, got '" + s + "'");
}

QuiverKind parse_quiver_kind(const std::string& s) {
    if (s == "A") return QuiverKind::A;
    if (s == "B") return QuiverKind::B;
    throw Error(ErrorKind::ParseError, "expected quiver A or B, got '" + s + "'");
}

ClassificationDatum make_datum(const std::string& dims, const std::string& k, const std::string& center) {
    ClassificationDatum d;
    d.dims = parse_int_list(dims);
    d.summands = parse_factors(k);
    if (!center.empty()) d.center = parse_center(center);
    d.validate();
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sphericity of flag varieties, Joseph ideals, quiver simples and S_n modules"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("LIEFLAG_SEED")) {
        try {
            opt.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: LIEFLAG_SEED is not an unsigned integer\n";
            return kExitInput;
        }
    }
    app.add_flag("--json", opt.json, "Print the report as JSON");
    app.add_option("--seed", opt.seed, "Oracle seed (default from LIEFLAG_SEED)");
    app.add_option("--samples", opt.samples, "Oracle sample count");
    app.add_option("--box", opt.box, "Oracle coordinate bound");

    Json report;
    std::function<void()> action;

    // classify
    std::string c_dims, c_k, c_center;
    bool c_oracle = false;
    CLI::App* classify = app.add_subcommand("classify", "Decide sphericity of a partial flag variety by the lists");
    classify->add_option("--dims", c_dims, "Flag dimensions, e.g. 2,4")->required();
    classify->add_option("--k", c_k, "Factors acting on their natural modules, e.g. sp(6) or sl(2)+sl(3)")->required();
    classify->add_option("--center", c_center, "Per-summand center vectors, e.g. 1,0;0,1");
    classify->add_flag("--oracle", c_oracle, "Cross-check with the rank oracle");
    classify->callback([&] {
        action = [&] {
            const ClassificationDatum d = make_datum(c_dims, c_k, c_center);
            const ClassificationVerdict v = classify_flag_datum(d);
            report["command"] = "classify";
            report["datum"] = to_string(d);
            report["normalized"] = to_string(v.normalized);
            report["verdict"] = v.spherical ? "Spherical" : "NotSpherical";
            if (v.spherical) {
                report["case"] = v.case_id;
            } else {
                report["reason"] = to_string(v.reason);
            }
            if (!v.detail.empty()) report["detail"] = v.detail;
            if (c_oracle) {
                const OracleVerdict o = is_spherical_flag(datum_algebra(d), d.flag(), opt.oracle());
                report["oracle"] = oracle_json(o);
                report["agree"] = o.spherical == v.spherical;
            }
        };
    });

    // oracle
    std::string o_dims, o_k, o_module, o_center;
    bool o_scalar = false;
    CLI::App* oracle = app.add_subcommand("oracle", "Rank oracle for an open Borel orbit");
    oracle->add_option("--dims", o_dims, "Flag dimensions (flag mode)");
    oracle->add_option("--k", o_k, "Factors on their natural modules (flag mode)");
    oracle->add_option("--module", o_module, "Module, e.g. \"sl(3) on nat+dual\" (module mode)");
    oracle->add_option("--center", o_center, "Per-summand center vectors");
    oracle->add_flag("--scalar", o_scalar, "Add the identity to the algebra (module mode)");
    oracle->callback([&] {
        action = [&] {
            report["command"] = "oracle";
            if (!o_module.empty()) {
                const ModuleSpec m = parse_module(o_module);
                const CenterVectors center = parse_center(o_center);
                report["module"] = to_string(m);
                report["result"] = oracle_json(is_spherical_module(m, center, o_scalar, opt.oracle()));
            } else {
                if (o_dims.empty() || o_k.empty())
                    throw Error(ErrorKind::ParseError, "oracle needs --module, or --dims with --k");
                const ClassificationDatum d = make_datum(o_dims, o_k, o_center);
                report["datum"] = to_string(d);
                report["result"] = oracle_json(is_spherical_flag(datum_algebra(d), d.flag(), opt.oracle()));
            }
        };
    });

    // order
    std::string r_f1, r_f2;
    int r_n = 0;
    CLI::App* order = app.add_subcommand("order", "Compare two flag varieties of C^n by their Richardson orbits");
    order->add_option("--flag1", r_f1, "Dimensions of the first flag")->required();
    order->add_option("--flag2", r_f2, "Dimensions of the second flag")->required();
    order->add_option("--n", r_n, "Ambient dimension")->required();
    order->callback([&] {
        action = [&] {
            const FlagType f1 = FlagType::make(parse_int_list(r_f1), r_n);
            const FlagType f2 = FlagType::make(parse_int_list(r_f2), r_n);
            const FlagOrderRelation rel = flag_order(f1, f2);
            report["command"] = "order";
            report["flag1"] = to_string(f1);
            report["flag2"] = to_string(f2);
            report["richardson1"] = to_string(richardson_partition(f1));
            report["richardson2"] = to_string(richardson_partition(f2));
            report["relation"] = to_string(rel);
            if (rel == FlagOrderRelation::Higher) report["higher"] = "flag1";
            if (rel == FlagOrderRelation::Lower) report["higher"] = "flag2";
        };
    });

    // tuple
    std::string t_text;
    CLI::App* tuple = app.add_subcommand("tuple", "Classify a rational tuple");
    tuple->add_option("tuple", t_text, "Comma separated rationals, e.g. 7/2,5/2,1/2")->required();
    tuple->callback([&] {
        action = [&] {
            const RationalTuple t = parse_tuple(t_text);
            const TupleClass c = classify_tuple(t);
            report["command"] = "tuple";
            report["tuple"] = to_string(t);
            report["kind"] = kind_name(c.kind);
            if (c.kind == DecreasingKind::SemiDecreasing) report["removable"] = c.removable;
            report["integral"] = c.integral;
            report["semi_integral"] = c.semi_integral;
            report["regular"] = c.regular;
            if (c.kind == DecreasingKind::SemiDecreasing && t.size() >= 3) report["monodromy"] = to_string(monodromy(t));
            report["shale_weil"] = is_shale_weil(t);
            if (is_shale_weil(t)) report["positive"] = is_positive_sw(t);
        };
    });

    // joseph
    std::string j_type, j_tuple, j_w;
    int j_nv = 0;
    CLI::App* joseph = app.add_subcommand("joseph", "Joseph-ideal predicates and bounded-module counts");
    joseph->add_option("type", j_type, "sl or sp")->required()->check(CLI::IsMember({"sl", "sp"}));
    joseph->add_option("tuple", j_tuple, "Tuple label of the primitive ideal")->required();
    joseph->add_option("--w", j_w, "sym2 or wedge2: also count simple bounded modules (sl only)");
    joseph->add_option("--nv", j_nv, "dim V for --w");
    joseph->callback([&] {
        action = [&] {
            const RationalTuple t = parse_tuple(j_tuple);
            report["command"] = "joseph";
            report["type"] = j_type;
            report["tuple"] = to_string(t);
            if (j_type == "sl") {
                const JosephSl j = is_joseph_sl(t);
                report["joseph"] = j.which != JosephSl::Case::NotJoseph;
                report["case"] = to_string(j);
                if (!j_w.empty()) {
                    const WKind kind = parse_wkind(j_w);
                    const QuiverSpec spec = quiver_for(kind, j_nv);
                    report["w"] = j_w;
                    report["nv"] = j_nv;
                    report["quiver"] = std::string(to_string(spec.kind)) + "(" + std::to_string(spec.n) + ")";
                    report["monodromy"] = to_string(monodromy(t));
                    report["bounded_simples"] = bounded_count_sl(t, kind, j_nv);
                }
            } else {
                if (!j_w.empty()) throw Error(ErrorKind::BadParameter, "--w applies to sl only");
                report["joseph"] = is_joseph_sp(t);
                if (is_shale_weil(t)) report["pair_representative"] = to_string(sw_pair_index(t, "L").first);
            }
        };
    });

    // count-simples
    std::string q_kind, q_mono, q_spectrum;
    int q_n = 0;
    bool q_list = false;
    CLI::App* count = app.add_subcommand("count-simples", "Simple quiver representations with given monodromy");
    count->add_option("--quiver", q_kind, "A or B")->required();
    count->add_option("--n", q_n, "Number of arrow pairs")->required();
    count->add_option("--monodromy", q_mono, "Residue p/q in [0,1) or 'generic'")->required();
    count->add_option("--spectrum", q_spectrum, "Kind B sign pair filter, e.g. 1,-1");
    count->add_flag("--list", q_list, "List the simple descriptors");
    count->callback([&] {
        action = [&] {
            const QuiverSpec spec{parse_quiver_kind(q_kind), q_n};
            spec.validate();
            const MonodromyClass c = parse_monodromy(q_mono);
            std::optional<SpectrumFilter> filter;
            if (!q_spectrum.empty()) {
                const std::vector<int> s = parse_int_list(q_spectrum);
                if (s.size() != 2 || std::abs(s[0]) != 1 || std::abs(s[1]) != 1)
                    throw Error(ErrorKind::ParseError, "spectrum filter is a pair of signs, e.g. 1,-1");
                filter = SpectrumFilter{s[0], s[1]};
            }
            report["command"] = "count-simples";
            report["quiver"] = to_string(spec.kind);
            report["n"] = spec.n;
            report["monodromy"] = to_string(c);
            const std::vector<SimpleDescriptor> simples = enumerate_simples(spec, c, filter);
            report["simples"] = simples.size();
            if (!filter) report["count_P"] = count_P(spec, c);
            if (q_list) {
                Json list = Json::array();
                for (const SimpleDescriptor& d : simples) list.push_back(d.name());
                report["list"] = list;
            }
        };
    });

    // odd-pair
    std::string p_tuple;
    CLI::App* odd = app.add_subcommand("odd-pair", "The odd pair of Spin modules of a positive Shale-Weil tuple");
    odd->add_option("tuple", p_tuple, "Positive Shale-Weil tuple, e.g. 5/2,3/2,1/2")->required();
    odd->callback([&] {
        action = [&] {
            const OddPair p = odd_pair(parse_tuple(p_tuple));
            report["command"] = "odd-pair";
            report["mu"] = to_string(p.mu);
            report["lambda"] = to_string(p.lambda);
            report["sigma_lambda"] = to_string(p.sigma_lambda);
            report["dim"] = p.dim.get_str();
            report["sigma_dim"] = p.sigma_dim.get_str();
            report["equal"] = p.dim == p.sigma_dim;
        };
    });

    // product
    std::string x_s1, x_s2;
    bool x_oracle = false;
    CLI::App* product = app.add_subcommand("product", "Spherical products of two flag varieties of GL_n");
    product->add_option("--steps1", x_s1, "Steps of the first flag, e.g. 1,5")->required();
    product->add_option("--steps2", x_s2, "Steps of the second flag")->required();
    product->add_flag("--oracle", x_oracle, "Cross-check with the rank oracle");
    product->callback([&] {
        action = [&] {
            const std::vector<int> s1 = parse_int_list(x_s1), s2 = parse_int_list(x_s2);
            const bool listed = product_flags_spherical(s1, s2);
            report["command"] = "product";
            report["steps1"] = join(s1);
            report["steps2"] = join(s2);
            report["verdict"] = listed ? "Spherical" : "NotSpherical";
            if (x_oracle) {
                const FlagType f1 = FlagType::from_steps(s1), f2 = FlagType::from_steps(s2);
                const OracleVerdict o = product_flag_verdict(f1.ambient, f1, f2, opt.oracle());
                report["oracle"] = oracle_json(o);
                report["agree"] = o.spherical == listed;
            }
        };
    });

    // table
    std::string b_id, b_module, b_center;
    CLI::App* table = app.add_subcommand("table", "The list of spherical modules and the module test");
    table->add_option("--id", b_id, "Show one entry");
    table->add_option("--module", b_module, "Test a module, e.g. \"sl(3) on nat+dual\"");
    table->add_option("--center", b_center, "Per-summand center vectors for --module");
    table->callback([&] {
        action = [&] {
            report["command"] = "table";
            if (!b_module.empty()) {
                const ModuleSpec m = parse_module(b_module);
                const TableVerdict v = table_module_verdict(m, parse_center(b_center));
                report["module"] = to_string(m);
                report["verdict"] = v.spherical ? "Spherical" : "NotSpherical";
                Json matches = Json::array();
                for (const BlockMatch& b : v.matches) {
                    Json mj;
                    mj["entry"] = b.entry_id;
                    mj["params"] = b.params;
                    std::vector<int> idx(b.summands.begin(), b.summands.end());
                    mj["summands"] = idx;
                    matches.push_back(mj);
                }
                report["matches"] = matches;
                report["unmatched_blocks"] = v.unmatched_blocks.size();
                report["normalizer_ok"] = v.normalizer_ok;
                if (!v.reason.empty()) report["reason"] = v.reason;
                return;
            }
            Json entries = Json::array();
            for (const SphericalTableEntry& e : spherical_table()) {
                if (!b_id.empty() && e.id != b_id) continue;
                Json ej;
                ej["id"] = e.id;
                ej["pair"] = e.pair;
                ej["center"] = e.center;
                ej["constraints"] = e.constraints.empty() ? "-" : e.constraints;
                ej["matrix_model"] = e.matrix_model;
                entries.push_back(ej);
            }
            if (entries.empty()) throw Error(ErrorKind::BadParameter, "no table entry '" + b_id + "'");
            report["entries"] = entries;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    int code = kExitDecision;
    try {
        action();
    } catch (const Error& e) {
        const ErrorKind k = e.kind();
        code = (k == ErrorKind::UnsupportedShape || k == ErrorKind::NoMatrixModel ||
                k == ErrorKind::UnrecognizedShape)
                   ? kExitShape
                   : kExitInput;
        report = Json();
        report["error"] = error_kind_name(k);
        report["message"] = e.what();
    }
    if (opt.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        print_flat(std::cout, report, "");
    }
    return code;
}
