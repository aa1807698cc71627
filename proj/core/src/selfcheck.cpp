#include "aircov/selfcheck.hpp"

#include <charconv>
#include <cstring>

#include "aircov/channel.hpp"
#include "aircov/config.hpp"
#include "aircov/packing.hpp"

namespace aircov {

namespace {

bool survives_text(double v) {
    const std::string s = fmt_double(v);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return false;
    return std::memcmp(&back, &v, sizeof v) == 0;
}

void expect(std::vector<std::string>& bad, bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
}

} // namespace

std::vector<std::string> self_check() {
    std::vector<std::string> bad;

    // Reference copies of the shipped constants, kept separate from the
    // live tables on purpose: a stray edit to either copy shows up here.
    struct env_ref { const char* name; double j, k, l, m, n; };
    static const env_ref envs[] = {
        {"suburban", 101.6, 0.0, 0.0, 3.25, 1.241},
        {"highrise_urban", 352.0, -1.37, -53.0, 173.8, 4.670},
    };
    for (const auto& r : envs) {
        const environment& e = environment_by_name(r.name);
        expect(bad,
               e.j == r.j && e.k == r.k && e.l == r.l && e.m == r.m && e.n == r.n,
               std::string("environment table drifted: ") + r.name);
        for (double v : {r.j, r.k, r.l, r.m, r.n})
            expect(bad, survives_text(v),
                   std::string("environment constant does not round-trip: ") + r.name);
    }

    static const double shadow_ref[3][7] = {
        {2.0, -94.20, -3.44, 0.0318, -89.55, -8.87, 0.0927},
        {3.5, -92.90, -3.14, 0.0302, -89.06, -8.63, 0.0921},
        {5.5, -92.80, -2.90, 0.0285, -89.54, -8.47, 0.9000},
    };
    for (const auto& r : shadow_ref) {
        const shadowing_params p = shadowing_table(r[0]);
        expect(bad,
               p.frequency_ghz == r[0] && p.p_mu == r[1] && p.q_mu == r[2] &&
                   p.t_mu == r[3] && p.p_sigma == r[4] && p.q_sigma == r[5] &&
                   p.t_sigma == r[6],
               "shadowing table drifted at " + fmt_double(r[0]) + " GHz");
        for (int i = 0; i < 7; ++i)
            expect(bad, survives_text(r[i]),
                   "shadowing constant does not round-trip at " + fmt_double(r[0]) + " GHz");
    }

    static const double hex_ratio_ref[10] = {
        1.0, 0.447, 0.500, 0.400, 0.333, 0.286, 0.333, 0.286, 0.250, 0.286};
    static const double hex_cov_ref[10] = {
        100.0, 75.0, 75.0, 75.0, 75.0, 75.0, 77.8, 72.7, 69.2, 75.0};
    static const double circle_ratio_ref[10] = {
        1.0, 0.500, 0.464, 0.413, 0.370, 0.333, 0.333, 0.302, 0.275, 0.261};
    static const double circle_cov_ref[10] = {
        100.0, 50.0, 64.6, 68.6, 68.5, 66.6, 77.8, 73.3, 68.9, 68.7};
    for (int n = 1; n <= 10; ++n) {
        const auto h = packing_entry(n, packing_scheme::hex);
        const auto c = packing_entry(n, packing_scheme::circle);
        expect(bad,
               h.r_ratio == hex_ratio_ref[n - 1] &&
                   h.coverage_percent == hex_cov_ref[n - 1] &&
                   c.r_ratio == circle_ratio_ref[n - 1] &&
                   c.coverage_percent == circle_cov_ref[n - 1],
               "packing table drifted at N=" + std::to_string(n));
        for (double v : {h.r_ratio, h.coverage_percent, c.r_ratio, c.coverage_percent})
            expect(bad, survives_text(v),
                   "packing constant does not round-trip at N=" + std::to_string(n));
    }

    expect(bad, hex_coverage_n3() == 75.0, "hex N=3 analytic anchor is not 75.0");
    expect(bad, packing_entry(3, packing_scheme::hex).coverage_percent == hex_coverage_n3(),
           "hex table disagrees with the N=3 anchor");

    // Whole-config round trips through both file shapes, carrying every
    // channel constant through the optional override keys.
    run_config plain;
    expect(bad, parse_config(to_key_value(plain)) == plain,
           "default config does not round-trip as key=value");
    expect(bad, parse_config(to_json_text(plain)) == plain,
           "default config does not round-trip as JSON");

    for (int i = 0; i < 3; ++i) {
        run_config cfg;
        cfg.f_ghz = shadow_ref[i][0];
        cfg.shadow_p_mu = shadow_ref[i][1];
        cfg.shadow_q_mu = shadow_ref[i][2];
        cfg.shadow_t_mu = shadow_ref[i][3];
        cfg.shadow_p_sigma = shadow_ref[i][4];
        cfg.shadow_q_sigma = shadow_ref[i][5];
        cfg.shadow_t_sigma = shadow_ref[i][6];
        const env_ref& e = envs[i % 2];
        cfg.environment = "custom";
        cfg.env_j = e.j;
        cfg.env_k = e.k;
        cfg.env_l = e.l;
        cfg.env_m = e.m;
        cfg.env_n = e.n;
        expect(bad, parse_config(to_key_value(cfg)) == cfg,
               "constant-bearing config does not round-trip as key=value");
        expect(bad, parse_config(to_json_text(cfg)) == cfg,
               "constant-bearing config does not round-trip as JSON");
    }

    return bad;
}

} // namespace aircov
