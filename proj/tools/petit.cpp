/*
   Copyright 2026 The petit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * petit — exact computer algebra for skew polynomial rings over finite
 * chain rings, the nonassociative quotients S_f, their pseudolinear maps,
 * cyclic (f,sigma,delta)-codes and generalized Galois ring analysis.
 *
 * Subcommands: ring, divmod, analyze, matrix, code (+ code encode), ggr,
 * norm, selftest. Output is deterministic given the inputs and --seed.
 * Exit codes: 0 success, 1 failed checks, 2 parse errors, 3 domain errors.
 */

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/fixtures.hpp"
#include "petit/ggr.hpp"
#include "petit/matrix.hpp"
#include "petit/morphism.hpp"
#include "petit/parse.hpp"
#include "petit/petit_algebra.hpp"
#include "petit/pseudolinear.hpp"
#include "petit/report.hpp"
#include "petit/selftest.hpp"
#include "petit/skew_code.hpp"
#include "petit/skew_poly.hpp"

namespace {

using json = nlohmann::json;
using namespace petit;

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t cap = ChainRing::kDefaultEnumCap;
    unsigned jobs = 1;
};

struct CtxArgs {
    std::string ring = "F4";
    std::string sigma;  // empty = frobenius:1 when n >= 2, else id
    std::string delta = "zero";
};

CtxPtr build_ctx(const CtxArgs& args) {
    RingPtr ring = parse_ring_spec(args.ring);
    const std::string sigma_spec =
        args.sigma.empty() ? (ring->n() >= 2 ? "frobenius:1" : "id") : args.sigma;
    RingMorphism sigma = parse_sigma_spec(ring, sigma_spec);
    RingMorphism delta = parse_delta_spec(ring, sigma, args.delta);
    return SkewPolyContext::make(ring, sigma, delta);
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

AlgPtr make_algebra(const CtxPtr& ctx, const std::string& f_spec) {
    AlgPtr a = PetitAlgebra::make(parse_poly(ctx, f_spec));
    if (a->was_normalized())
        std::cerr << "note: f was rescaled to its monic generator (S_f = S_{af})\n";
    return a;
}

int cmd_ring(const GlobalOpts& g, const std::string& spec, bool list) {
    RingPtr ring = parse_ring_spec(spec);
    json j = report::ring_json(*ring);
    j["schema"] = report::kSchemaVersion;
    j["zero_divisor_count"] = ring->cardinality() - ring->unit_count() - 1;
    j["residue_field"] = report::ring_json(*ring->residue_field());
    std::string text = "S = Z_" + std::to_string(ring->coeff_modulus()) +
                       (ring->n() > 1 ? "[x]/(modulus), n = " + std::to_string(ring->n()) : "") +
                       ", " + std::to_string(ring->cardinality()) + " elements, " +
                       std::to_string(ring->unit_count()) + " units\n";
    if (list) {
        json els = json::array();
        std::string eltext;
        for (const auto& a : ring->enumerate(g.cap)) {
            els.push_back(report::element_json(a));
            eltext += a.to_string() + "\n";
        }
        j["elements"] = els;
        text += eltext;
    }
    emit(g, j, text);
    return 0;
}

int cmd_divmod(const GlobalOpts& g, const CtxArgs& cargs, const std::string& g_spec,
               const std::string& f_spec, const std::string& side) {
    CtxPtr ctx = build_ctx(cargs);
    const SkewPoly gp = parse_poly(ctx, g_spec);
    const SkewPoly fp = parse_poly(ctx, f_spec);
    const DivModResult dm = side == "left" ? left_divmod(gp, fp) : right_divmod(gp, fp);
    const SkewPoly recombined = side == "left" ? fp * dm.q + dm.r : dm.q * fp + dm.r;
    detail::require(recombined == gp, "InternalError", "division identity failed");
    json j;
    j["schema"] = report::kSchemaVersion;
    j["side"] = side;
    j["q"] = report::poly_json(dm.q);
    j["r"] = report::poly_json(dm.r);
    j["identity_checked"] = true;
    emit(g, j,
         "q = " + dm.q.to_string() + "\nr = " + dm.r.to_string() + "\n");
    return 0;
}

int cmd_analyze(const GlobalOpts& g, const CtxArgs& cargs, const std::string& f_spec) {
    CtxPtr ctx = build_ctx(cargs);
    AlgPtr a = make_algebra(ctx, f_spec);
    a->mult_table(g.jobs);

    json j;
    j["schema"] = report::kSchemaVersion;
    j["ring"] = report::ring_json(*ctx->ring);
    j["f"] = report::poly_json(a->f());
    j["m"] = a->m();
    j["size"] = a->size();
    j["normalized_input"] = a->was_normalized();
    j["two_sided"] = is_two_sided(a->f());
    j["associative"] = a->is_associative(PetitAlgebra::kDefaultSampleTriples, g.seed);
    j["nucleus_sizes"] = {{"left", a->nucleus(NucleusSlot::left).size()},
                          {"middle", a->nucleus(NucleusSlot::middle).size()},
                          {"right", a->nucleus(NucleusSlot::right).size()}};
    j["eigenring_size"] = a->eigenring().size();
    j["commuter_size"] = a->commuter().size();
    j["center_size"] = a->center().size();
    const auto s0 = a->scalar_ring();
    j["s0"] = {{"size", s0.size()}, {"elements", report::element_list_json(s0)}};
    if (ctx->delta_is_zero())
        j["commuter_lower_bound_size"] = a->commuter_lower_bound().size();
    j["zero_divisor_count"] = a->zero_divisor_pairs().size();
    j["semifield"] = a->is_semifield();
    const auto tli = a->t_left_invertible();
    j["t_left_invertible"] = tli.invertible;
    if (tli.witness) j["t_left_inverse"] = report::alg_elem_json(*tli.witness);

    std::string text = "S_f with f = " + a->f().to_string() + ", |A| = " +
                       std::to_string(a->size()) + "\n" +
                       (j["associative"].get<bool>() ? "associative" : "nonassociative") +
                       (j["semifield"].get<bool>() ? ", semifield" : "") + "\n" +
                       "nuclei (l/m/r): " + j["nucleus_sizes"]["left"].dump() + "/" +
                       j["nucleus_sizes"]["middle"].dump() + "/" +
                       j["nucleus_sizes"]["right"].dump() +
                       ", commuter: " + j["commuter_size"].dump() +
                       ", center: " + j["center_size"].dump() + ", |S0|: " +
                       std::to_string(s0.size()) + "\n";
    emit(g, j, text);
    return 0;
}

int cmd_matrix(const GlobalOpts& g, const CtxArgs& cargs, const std::string& f_spec,
               const std::string& h_spec, const std::string& which) {
    CtxPtr ctx = build_ctx(cargs);
    AlgPtr a = make_algebra(ctx, f_spec);
    MatrixOverS m(ctx->ring, 1, 1);
    if (which == "companion") {
        m = companion(a->f());
    } else {
        detail::require(!h_spec.empty(), "MissingArgument", "--h is required for " + which);
        const AlgElem h = a->from_poly(parse_poly(ctx, h_spec));
        m = which == "gamma" ? right_mul_matrix(*a, h) : left_mul_matrix(*a, h);
    }
    json j;
    j["schema"] = report::kSchemaVersion;
    j["which"] = which;
    j["matrix"] = report::matrix_json(m);
    emit(g, j, m.to_text());
    return 0;
}

json code_report(const GlobalOpts& g, const SkewCode& code, const RingElement& d) {
    json j;
    j["schema"] = report::kSchemaVersion;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["size"] = code.size();
    j["g"] = report::poly_json(code.g);
    j["h_prime"] = report::poly_json(code.h_prime);
    j["h"] = code.h ? report::poly_json(*code.h) : json(nullptr);
    j["generator_matrix"] = report::matrix_json(code.gen_matrix);
    j["control_matrix"] = code.ctrl_matrix ? report::matrix_json(*code.ctrl_matrix)
                                           : json(nullptr);
    j["min_distance"] = code.size() > 1 ? json(min_distance(code)) : json(nullptr);
    j["constacyclic"] = {{"d", report::element_json(d)},
                         {"holds", constacyclic_check(code, d)},
                         {"f_has_shape", is_constacyclic_shape(code.algebra->f(), d)}};
    j["left_ideal"] = left_ideal_check(code, g.cap);
    j["lt_closed"] = lt_closure_check(code);
    j["weight_enumerator"] = weight_enumerator(code);
    return j;
}

int cmd_code(const GlobalOpts& g, const CtxArgs& cargs, const std::string& f_spec,
             const std::string& g_spec, const std::string& d_spec, bool encode_mode,
             const std::string& msg_spec) {
    CtxPtr ctx = build_ctx(cargs);
    AlgPtr a = make_algebra(ctx, f_spec);
    const SkewPoly gp = parse_poly(ctx, g_spec);
    const SkewCode code = build_code(a, gp, g.cap);

    if (encode_mode) {
        const SkewPoly msg = parse_poly(ctx, msg_spec);
        detail::require(msg.degree() < static_cast<int>(code.dimension()), "ShapeMismatch",
                        "message must have fewer than k = " +
                            std::to_string(code.dimension()) + " coefficients");
        std::vector<RingElement> u(code.dimension(), ctx->ring->zero());
        for (std::size_t i = 0; i < msg.coeffs().size(); ++i) u[i] = msg.coeffs()[i];
        const auto word = encode(code, u);
        json j;
        j["schema"] = report::kSchemaVersion;
        j["codeword"] = report::element_list_json(word);
        std::string text;
        for (const auto& s : word) text += s.to_string() + " ";
        emit(g, j, text + "\n");
        return 0;
    }

    const RingElement d =
        d_spec.empty() ? ctx->ring->one() : parse_element(ctx->ring, d_spec);
    json j = code_report(g, code, d);
    std::string text = "[" + std::to_string(code.length()) + ", " +
                       std::to_string(code.dimension()) + "] code, " +
                       std::to_string(code.size()) + " words\n" +
                       "generator matrix:\n" + code.gen_matrix.to_text();
    if (code.ctrl_matrix) text += "control matrix:\n" + code.ctrl_matrix->to_text();
    if (code.size() > 1)
        text += "min distance " + std::to_string(min_distance(code)) + "\n";
    emit(g, j, text);
    return 0;
}

int cmd_ggr(const GlobalOpts& g, const CtxArgs& cargs, const std::string& f_spec) {
    CtxPtr ctx = build_ctx(cargs);
    AlgPtr a = make_algebra(ctx, f_spec);
    const GGRReport rep = ggr_check(a, g.jobs);
    json j;
    j["schema"] = report::kSchemaVersion;
    j["element_count"] = rep.element_count;
    j["zero_divisor_set_size"] = rep.zero_divisor_set_size;
    j["pA_size"] = rep.pa_size;
    j["is_ggr"] = rep.is_ggr;
    j["top_factor"] = {{"f", report::poly_json(rep.top_factor->f())},
                       {"semifield", rep.top_is_semifield}};
    j["is_lifting"] = rep.is_lifting;
    j["base_irreducible"] = base_irreducible(a->f());
    std::string text = "|A| = " + std::to_string(rep.element_count) + ", zero divisors " +
                       std::to_string(rep.zero_divisor_set_size) + ", |pA| = " +
                       std::to_string(rep.pa_size) + (rep.is_ggr ? " -> GGR" : " -> not a GGR") +
                       (rep.is_lifting ? " (lifting)" : "") + "\n";
    emit(g, j, text);
    return 0;
}

int cmd_norm(const GlobalOpts& g, const CtxArgs& cargs, const std::string& f_spec,
             const std::string& h_spec) {
    CtxPtr ctx = build_ctx(cargs);
    AlgPtr a = make_algebra(ctx, f_spec);
    const AlgElem h = a->from_poly(parse_poly(ctx, h_spec));
    const RingElement m = norm_map(*a, h);
    json j;
    j["schema"] = report::kSchemaVersion;
    j["M"] = report::element_json(m);
    emit(g, j, m.to_string() + "\n");
    return 0;
}

int cmd_selftest(const GlobalOpts& g) {
    const auto results = selftest::run_all(g.seed, g.jobs);
    std::size_t passed = 0;
    json arr = json::array();
    for (const auto& r : results) {
        passed += r.passed;
        std::printf("[%s] %2d  %s — %s (%.0f ms)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.millis);
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail}});
    }
    std::printf("%zu/%zu criteria passed\n", passed, results.size());
    if (g.format == "json") std::cout << arr.dump(2) << "\n";
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact skew-polynomial algebra over finite chain rings"};
    app.require_subcommand(1);
    // keep the short -h free: two subcommands take a polynomial option --h
    app.set_help_flag("--help", "print help");
    auto add_sub = [&app](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "seed for sampled modes");
    app.add_option("--cap", g.cap, "enumeration cap");
    app.add_option("--jobs", g.jobs, "worker threads for exhaustive scans");

    int exit_code = 0;

    CtxArgs ring_args;
    bool list_elements = false;
    auto* c_ring = add_sub("ring", "inspect a chain ring");
    c_ring->add_option("--ring", ring_args.ring, "ring spec or fixture name")->required();
    c_ring->add_flag("--list", list_elements, "list all elements");
    c_ring->callback([&] { exit_code = cmd_ring(g, ring_args.ring, list_elements); });

    CtxArgs dm_args;
    std::string dm_g, dm_f, dm_side = "right";
    auto* c_dm = add_sub("divmod", "division with remainder");
    c_dm->add_option("--ring", dm_args.ring);
    c_dm->add_option("--sigma", dm_args.sigma);
    c_dm->add_option("--delta", dm_args.delta);
    c_dm->add_option("--g", dm_g)->required();
    c_dm->add_option("--f", dm_f)->required();
    c_dm->add_option("--side", dm_side)->check(CLI::IsMember({"right", "left"}));
    c_dm->callback([&] { exit_code = cmd_divmod(g, dm_args, dm_g, dm_f, dm_side); });

    CtxArgs an_args;
    std::string an_f;
    auto* c_an = add_sub("analyze", "structure report of S_f");
    c_an->add_option("--ring", an_args.ring);
    c_an->add_option("--sigma", an_args.sigma);
    c_an->add_option("--delta", an_args.delta);
    c_an->add_option("--f", an_f)->required();
    c_an->callback([&] { exit_code = cmd_analyze(g, an_args, an_f); });

    CtxArgs mx_args;
    std::string mx_f, mx_h, mx_which = "gamma";
    auto* c_mx = add_sub("matrix", "companion / multiplication matrices");
    c_mx->add_option("--ring", mx_args.ring);
    c_mx->add_option("--sigma", mx_args.sigma);
    c_mx->add_option("--delta", mx_args.delta);
    c_mx->add_option("--f", mx_f)->required();
    c_mx->add_option("--h", mx_h);
    c_mx->add_option("--which", mx_which)
        ->check(CLI::IsMember({"gamma", "lambda", "companion"}));
    c_mx->callback([&] { exit_code = cmd_matrix(g, mx_args, mx_f, mx_h, mx_which); });

    CtxArgs cd_args;
    std::string cd_f, cd_g, cd_d, cd_msg;
    auto* c_cd = add_sub("code", "cyclic (f,sigma,delta)-codes");
    c_cd->add_option("--ring", cd_args.ring);
    c_cd->add_option("--sigma", cd_args.sigma);
    c_cd->add_option("--delta", cd_args.delta);
    c_cd->add_option("--f", cd_f)->required();
    c_cd->add_option("--g", cd_g)->required();
    c_cd->add_option("--d", cd_d, "constacyclic constant (default 1)");
    auto* c_enc = c_cd->add_subcommand("encode", "encode a message");
    c_enc->set_help_flag("--help", "print help");
    c_enc->add_option("--msg", cd_msg)->required();
    c_cd->callback([&] {
        exit_code = cmd_code(g, cd_args, cd_f, cd_g, cd_d, c_enc->parsed(), cd_msg);
    });

    CtxArgs gg_args;
    std::string gg_f;
    auto* c_gg = add_sub("ggr", "generalized Galois ring verification");
    c_gg->add_option("--ring", gg_args.ring);
    c_gg->add_option("--sigma", gg_args.sigma);
    c_gg->add_option("--delta", gg_args.delta);
    c_gg->add_option("--f", gg_f)->required();
    c_gg->callback([&] { exit_code = cmd_ggr(g, gg_args, gg_f); });

    CtxArgs nm_args;
    std::string nm_f, nm_h;
    auto* c_nm = add_sub("norm", "M(h) = det(gamma(h))");
    c_nm->add_option("--ring", nm_args.ring);
    c_nm->add_option("--sigma", nm_args.sigma);
    c_nm->add_option("--delta", nm_args.delta);
    c_nm->add_option("--f", nm_f)->required();
    c_nm->add_option("--h", nm_h)->required();
    c_nm->callback([&] { exit_code = cmd_norm(g, nm_args, nm_f, nm_h); });

    auto* c_st = add_sub("selftest", "run the acceptance suite");
    c_st->callback([&] { exit_code = cmd_selftest(g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const petit::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const petit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "CheckFailed" ? 1 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
