/*
   Copyright 2026 The k3w Authors

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

// k3verify: command line front end. Exit codes: 0 pass, 1 failed check, 2 usage error.

#include <iostream>

#include "CLI11.hpp"
#include "reports.hpp"

using namespace k3w::cli;

namespace {

struct Output {
    std::string format = "text";
    bool timing = false;
};

void print_text(const Report& r, bool timing) {
    std::cout << (r.pass ? "PASS " : "FAIL ");
    if (!r.id.empty()) std::cout << "[" << r.id << "] ";
    std::cout << r.command << ": " << r.claim;
    if (timing) std::cout << " (" << static_cast<long long>(r.millis) << " ms)";
    std::cout << "\n  " << r.result.dump() << "\n";
}

int emit(const std::vector<Report>& reports, const Output& out, bool aggregate) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    if (out.format == "json") {
        if (aggregate) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(r.to_json(out.timing));
            std::cout << json{{"schema", "1"}, {"command", "verify-all"}, {"reports", arr}, {"verdict", pass ? "pass" : "fail"}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& r : reports) std::cout << r.to_json(out.timing).dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) print_text(r, out.timing);
        if (aggregate) std::cout << (pass ? "all checks passed" : "some checks failed") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification reports for the characteristic 11 elliptic K3 pencil"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: --format/--timing work after any subcommand
    Output out;
    app.add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", out.timing, "include wall time per report");

    std::function<std::vector<Report>()> action;
    bool aggregate = false;

    // surface
    auto* surface = app.add_subcommand("surface", "Weierstrass model, discriminant and fibres");
    surface->require_subcommand(1);
    SurfaceInput sin;
    auto surface_opts = [&](CLI::App* c) {
        c->add_option("--epsilon,-e", sin.epsilon, "eps in F11 (default 0)");
        c->add_option("--a2", sin.a2, "free-form degree 4 coefficient over F11");
        c->add_option("--a4", sin.a4, "free-form degree 8 coefficient over F11");
        c->add_option("--a6", sin.a6, "free-form degree 12 coefficient over F11");
    };
    struct SurfaceCmd {
        const char* name;
        const char* help;
        Report (*fn)(const SurfaceInput&);
    };
    const SurfaceCmd surface_cmds[] = {{"build", "A(t), B(t) and the model", surface_build},
                                       {"discriminant", "discriminant against the closed form", surface_discriminant},
                                       {"census", "singular fibres and Euler number", surface_census},
                                       {"smooth", "fibre-by-fibre smoothness", surface_smooth}};
    for (const auto& [name, help, fn] : surface_cmds) {
        auto* c = surface->add_subcommand(name, help);
        surface_opts(c);
        c->callback([&, fn = fn] { action = [&, fn] { return std::vector<Report>{fn(sin)}; }; });
    }

    // aut
    auto* aut = app.add_subcommand("aut", "automorphisms of the weighted projective model");
    aut->require_subcommand(1);
    std::string map = "g(0)", target = "e~", matrix;
    std::optional<long long> aut_eps;
    std::vector<std::string> alphas;
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    auto* scalar = aut->add_subcommand("scalar", "unit u with F∘s = u F");
    scalar->add_option("--map", map);
    scalar->add_option("--epsilon,-e", aut_eps, "surface parameter (default: taken from the map)");
    scalar->callback([&] { action = [&] { return std::vector<Report>{aut_scalar(map, aut_eps)}; }; });
    auto* order = aut->add_subcommand("order", "order modulo weighted scaling");
    order->add_option("--map", map);
    order->callback([&] { action = [&] { return std::vector<Report>{aut_order(map)}; }; });
    auto* mult = aut->add_subcommand("multiplier", "action on the 2-form");
    mult->add_option("--map", map);
    mult->callback([&] { action = [&] { return std::vector<Report>{aut_multiplier(map)}; }; });
    auto* norm = aut->add_subcommand("normalizes", "k with a b a^-1 = b^k");
    norm->add_option("--map", map, "a (default i~(1))");
    norm->add_option("--target", target, "b (default e~)");
    norm->callback([&] {
        if (norm->count("--map") == 0) map = "i~(1)";
        action = [&] { return std::vector<Report>{aut_normalizes(map, target)}; };
    });
    auto* herm = aut->add_subcommand("hermitian", "diagonalize t0 t1^11 - t0^11 t1");
    herm->add_option("--alpha", alphas, "alpha in F121 \\ F11, e.g. 1+w (default: all)");
    herm->callback([&] { action = [&] { return std::vector<Report>{aut_hermitian(alphas)}; }; });
    auto* gu2 = aut->add_subcommand("gu2", "unitary matrices preserve t0^12 + t1^12");
    gu2->add_option("--matrix", matrix, "a,b,c,d over F121");
    gu2->add_option("--count", count, "random samples (default 1000)");
    gu2->add_option("--seed", seed);
    gu2->callback([&] {
        std::optional<std::string> m;
        if (gu2->count("--matrix")) m = matrix;
        action = [&, m] { return std::vector<Report>{aut_gu2(m, count, seed)}; };
    });

    // group
    auto* group = app.add_subcommand("group", "permutation groups");
    group->require_subcommand(1);
    std::string gname = "M22";
    std::optional<std::string> gfile;
    struct GroupCmd {
        const char* name;
        const char* help;
        Report (*fn)(const std::string&, const std::optional<std::string>&);
    };
    const GroupCmd group_cmds[] = {{"order", "stabilizer chain order", group_order},
                                   {"spectrum", "element order counts", group_spectrum},
                                   {"mu", "mu by average and by identity", group_mu}};
    for (const auto& [name, help, fn] : group_cmds) {
        auto* c = group->add_subcommand(name, help);
        c->add_option("--name", gname, "C11, F55 (11:5), L2_11 (L2(11)), M11, M22");
        c->add_option("--file", gfile, "generator file, one permutation per line");
        c->callback([&, fn = fn] { action = [&, fn] { return std::vector<Report>{fn(gname, gfile)}; }; });
    }

    // classify
    auto* classify = app.add_subcommand("classify", "order sieve");
    classify->require_subcommand(1);
    bool explain = false, no_sylow = false;
    auto* orders = classify->add_subcommand("orders", "admissible group orders");
    orders->add_flag("--explain", explain, "per-assignment constraint traces");
    orders->add_flag("--no-sylow", no_sylow, "drop the Sylow congruences");
    orders->callback([&] { action = [&] { return std::vector<Report>{classify_orders(explain, !no_sylow)}; }; });

    // checks
    auto* checks = app.add_subcommand("checks", "lattice and congruence checks");
    checks->require_subcommand(1);
    std::optional<std::string> gram;
    bool elem11 = false;
    auto* lattice = checks->add_subcommand("lattice", "rank 2 even lattice case");
    lattice->add_option("--gram", gram, "m00,m01,m11 of an even 2x2 Gram matrix");
    lattice->add_flag("--elementary11", elem11, "discriminant group is 11-elementary");
    lattice->callback([&] { action = [&] { return std::vector<Report>{checks_lattice(gram, elem11)}; }; });
    std::optional<long long> vm, vb;
    long long range = 50;
    auto* var0 = checks->add_subcommand("var0det", "determinant formula and sign");
    var0->add_option("--m", vm, "single m (with --b)");
    var0->add_option("--b", vb, "single b (with --m)");
    var0->add_option("--range", range, "sweep m, b over [1, range] (default 50)");
    var0->callback([&] { action = [&] { return std::vector<Report>{checks_var0det(vm, vb, range)}; }; });
    long long r = 12, s2 = 1;
    std::vector<long long> orbits{11}, mi, bi;
    std::string variant = "squared";
    std::size_t random = 0;
    auto* mod11 = checks->add_subcommand("mod11", "mod 11 contradiction");
    mod11->add_option("--r", r, "r = 1 mod 11");
    mod11->add_option("--orbits", orbits, "orbit sizes")->delimiter(',');
    mod11->add_option("--m", mi, "m_i per orbit")->delimiter(',');
    mod11->add_option("--b", bi, "b_i per orbit")->delimiter(',');
    mod11->add_option("--s2", s2, "S^2");
    mod11->add_option("--variant", variant, "squared or unit");
    mod11->add_option("--random", random, "additional random valid inputs");
    mod11->callback([&] {
        action = [&] { return std::vector<Report>{checks_mod11(r, orbits, mi, bi, s2, variant, random)}; };
    });

    // counting
    long long ceps = 0;
    std::size_t ext = 1;
    bool large = false;
    auto* cnt = app.add_subcommand("count", "points over F_{11^k}");
    cnt->add_option("--epsilon,-e", ceps, "eps in F11 (default 0)");
    cnt->add_option("--ext,-k", ext, "k (default 1)");
    cnt->add_flag("--allow-large", large, "permit q > 121");
    cnt->callback([&] { action = [&] { return std::vector<Report>{count_points(ceps, ext, large)}; }; });
    std::string fmap = "g(0)";
    std::optional<long long> feps;
    auto* fixed = app.add_subcommand("fixed", "fixed points of a map over F_{11^k}");
    fixed->add_option("--map", fmap, "e.g. g(0), i~(1), e~");
    fixed->add_option("--epsilon,-e", feps, "surface parameter (default: taken from the map)");
    fixed->add_option("--ext,-k", ext, "k (default 1)");
    fixed->add_flag("--allow-large", large, "permit q > 121");
    fixed->callback([&] { action = [&] { return std::vector<Report>{fixed_points(fmap, feps, ext, large)}; }; });

    auto* all = app.add_subcommand("verify-all", "run every acceptance check");
    all->callback([&] {
        aggregate = true;
        action = [] { return verify_all(); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return emit(action(), out, aggregate);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
