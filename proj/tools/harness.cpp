#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "svg.hpp"

namespace rotevl::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& s, const std::string& what) {
    std::vector<std::uint64_t> out;
    for (const auto& tok : split(s, ',')) {
        if (tok.empty()) throw ConfigError(what + ": empty entry in '" + s + "'");
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (...) {
            throw ConfigError(what + ": bad integer '" + tok + "'");
        }
        if (pos != tok.size()) throw ConfigError(what + ": bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_uints(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string fmt_val(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string ext_to_csv(const ExtReal& x) {
    if (x.is_infinite()) return "inf";
    return fmt_val(x.to_double());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << content;
}

void write_manifest(const RunConfig& cfg, const std::vector<std::string>& outputs) {
    ordered_json m;
    m["tool"] = "rotation-evl";
    m["version"] = "0.1.0";
    m["command"] = cfg.command;
    m["spec"] = cfg.spec_text;
    m["k"] = cfg.k;
    m["jmax"] = cfg.jmax;
    m["grid"] = cfg.grid_text;
    m["n_samples"] = cfg.n_samples;
    m["seed"] = cfg.seed;
    m["tolerances"] = {{"emp_vs_finite", cfg.tol_emp_finite}, {"emp_vs_limit", cfg.tol_emp_limit}};
    m["threads"] = cfg.threads;
    m["plot"] = cfg.plot;
    m["outputs"] = outputs;
    write_file(std::filesystem::path(cfg.out_dir) / "manifest.json", m.dump(2) + "\n");
}

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return std::filesystem::path(cfg.out_dir) / name;
}

/// Finite breakpoints of the law (tail-extended a little) used for grid
/// validation and nudging.
std::vector<double> finite_breakpoints(const StepSurvival& h, double hi) {
    std::vector<double> out;
    for (int j = 0; j < 64; ++j) {
        ExtReal bp;
        try {
            bp = h.breakpoint_at(j);
        } catch (const ProfileIncomplete&) {
            break;
        }
        if (!bp.is_finite()) break;
        const double v = bp.to_double();
        out.push_back(v);
        if (v > hi * 2) break;
    }
    return out;
}

} // namespace

CFSpec parse_spec(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos)
        throw ConfigError("spec '" + text + "': expected <kind>:<args>");
    const std::string kind = text.substr(0, pos);
    const std::string args = text.substr(pos + 1);
    if (kind == "periodic") {
        const auto bar = args.find('|');
        if (bar == std::string::npos)
            return CFSpec(EventuallyPeriodic{{}, parse_uint_list(args, "periodic")});
        return CFSpec(EventuallyPeriodic{parse_uint_list(args.substr(0, bar), "preperiod"),
                                         parse_uint_list(args.substr(bar + 1), "period")});
    }
    if (kind == "block") {
        const auto v = parse_uint_list(args, "block");
        if (v.size() != 1 || v[0] < 1 || v[0] > 64)
            throw ConfigError("block:<N> needs one block length in [1,64]");
        return CFSpec(BlockFamily{static_cast<int>(v[0])});
    }
    if (kind == "affine") {
        const auto v = parse_uint_list(args, "affine");
        if (v.size() != 2) throw ConfigError("affine:<a>,<b> needs two integers");
        return CFSpec(AffineRule{v[0], v[1]});
    }
    if (kind == "explicit") return CFSpec(ExplicitTerms{parse_uint_list(args, "explicit")});
    throw ConfigError("unknown spec kind '" + kind + "'");
}

std::string format_spec(const CFSpec& spec) {
    if (const auto* e = std::get_if<ExplicitTerms>(&spec.kind()))
        return "explicit:" + join_uints(e->terms);
    if (const auto* p = std::get_if<EventuallyPeriodic>(&spec.kind())) {
        if (p->preperiod.empty()) return "periodic:" + join_uints(p->period);
        return "periodic:" + join_uints(p->preperiod) + "|" + join_uints(p->period);
    }
    if (const auto* b = std::get_if<BlockFamily>(&spec.kind()))
        return "block:" + std::to_string(b->block_len);
    const auto& a = std::get<AffineRule>(spec.kind());
    return "affine:" + std::to_string(a.slope) + "," + std::to_string(a.offset);
}

LimitProfile profile_for(const CFSpec& spec, int jmax) {
    try {
        return profile_analytic(spec, jmax);
    } catch (const UnsupportedSpec&) {
        int depth = 24;
        if (auto avail = spec.available_depth()) depth = *avail - 2;
        if (depth < jmax + 3)
            throw ConfigError("spec too short for a numeric profile at jmax = " +
                              std::to_string(jmax));
        auto table = ConvergentTable::build(spec, depth);
        const auto K = k_indices(spec.default_subsequence(), 0, depth - jmax);
        return profile_numeric(table, K, jmax);
    }
}

int resolve_k(const CFSpec& spec, int requested) {
    if (requested >= 0) {
        if (!spec.k_in_subsequence(requested))
            throw ConfigError("k = " + std::to_string(requested) +
                              " is not in the spec's subsequence K");
        return requested;
    }
    // default: largest k in K with q_k <= 1e5 (desk-scale runtimes)
    int best = -1;
    Int p0(0), p1(1), q0(1), q1(0);
    const Int cap(100000);
    for (int k = 0; k <= 4096; ++k) {
        Int qk;
        if (k == 0) {
            qk = 1;
        } else if (k == 1) {
            q1 = Int(static_cast<unsigned long>(spec.term(1)));
            qk = q1;
        } else {
            Int c(static_cast<unsigned long>(spec.term(k)));
            Int q2 = c * q1 + q0;
            q0 = q1;
            q1 = q2;
            qk = q1;
        }
        if (qk > cap) break;
        if (spec.k_in_subsequence(k)) best = k;
        if (auto avail = spec.available_depth(); avail && k + 2 >= *avail) break;
    }
    if (best < 1) throw ConfigError("no usable k found below the q_k budget");
    return best;
}

std::vector<Rational> resolve_grid(const std::string& text, const StepSurvival& h) {
    std::vector<double> raw;
    bool generated = true;
    double hi_used = 8;
    if (text == "auto" || text.rfind("log:", 0) == 0) {
        double lo = 0.5, hi = 8;
        int n = 64;
        if (text == "auto") {
            try {
                const ExtReal g4 = h.breakpoint_at(4);
                if (g4.is_finite()) hi = g4.to_double();
            } catch (const ProfileIncomplete&) {
            }
        } else {
            const auto parts = split(text.substr(4), ',');
            if (parts.size() != 3) throw ConfigError("grid 'log:<lo>,<hi>,<n>' needs 3 fields");
            lo = std::stod(parts[0]);
            hi = std::stod(parts[1]);
            n = std::stoi(parts[2]);
            if (!(lo > 0) || !(hi > lo) || n < 2) throw ConfigError("bad log grid parameters");
        }
        hi_used = hi;
        for (int i = 0; i < n; ++i)
            raw.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    } else if (text.rfind("list:", 0) == 0) {
        generated = false;
        for (const auto& tok : split(text.substr(5), ',')) {
            try {
                raw.push_back(std::stod(tok));
            } catch (...) {
                throw ConfigError("grid list: bad value '" + tok + "'");
            }
        }
        if (raw.empty()) throw ConfigError("grid list: empty");
        hi_used = *std::max_element(raw.begin(), raw.end());
    } else {
        throw ConfigError("grid '" + text + "': expected auto | log:... | list:...");
    }

    const auto bps = finite_breakpoints(h, hi_used);
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (double y : raw) {
        for (double bp : bps) {
            if (bp <= 0) continue;
            const double rel = std::abs(y / bp - 1.0);
            if (rel <= 1e-3) {
                if (!generated)
                    throw ConfigError("grid point " + std::to_string(y) +
                                      " collides with the breakpoint at " + std::to_string(bp));
                y = (y <= bp) ? bp * (1 - 1e-3) : bp * (1 + 1e-3);
            }
        }
        out.push_back(rational_from_double(y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_limits(const RunConfig& cfg) {
    const CFSpec spec = parse_spec(cfg.spec_text);
    std::ostringstream csv;
    csv << "provenance,j,nu,nu_err,theta,theta_err,gamma,gamma_err,delta,delta_err,converged\n";

    auto emit = [&](const LimitProfile& pr, const char* tag) {
        for (int j = 0; j <= pr.jmax; ++j) {
            auto row = [&](const ExtReal& x) {
                return ext_to_csv(x) + "," + fmt_val(x.err(), 3);
            };
            const bool conv =
                !pr.gamma_at(j).is_approx() || pr.gamma_at(j).approx().converged;
            csv << tag << "," << j << ",";
            if (j == 0)
                csv << ",,,,"; // nu/theta start at j = 1
            else
                csv << row(pr.nu_at(j)) << "," << row(pr.theta_at(j)) << ",";
            csv << row(pr.gamma_at(j)) << "," << row(pr.delta_at(j)) << ","
                << (conv ? "yes" : "no") << "\n";
        }
    };

    bool have_analytic = false;
    LimitProfile analytic;
    try {
        analytic = profile_analytic(spec, cfg.jmax);
        have_analytic = true;
        emit(analytic, "analytic");
    } catch (const UnsupportedSpec&) {
    }

    int depth = 30;
    if (auto avail = spec.available_depth()) depth = *avail - 2;
    double sup_disagreement = 0;
    bool have_numeric = false;
    if (depth >= cfg.jmax + 3) {
        const auto K = k_indices(spec.default_subsequence(), 0, depth - cfg.jmax);
        if (K.size() >= 3) {
            auto table = ConvergentTable::build(spec, depth);
            const LimitProfile numeric = profile_numeric(table, K, cfg.jmax);
            have_numeric = true;
            emit(numeric, "numeric");
            if (have_analytic) {
                for (int j = 0; j <= cfg.jmax; ++j) {
                    const ExtReal& a = analytic.gamma_at(j);
                    const ExtReal& n = numeric.gamma_at(j);
                    if (a.is_finite() && n.is_finite())
                        sup_disagreement =
                            std::max(sup_disagreement, std::abs(a.to_double() - n.to_double()));
                }
            }
        }
    }
    if (!have_analytic && !have_numeric)
        throw ConfigError("spec supports neither an analytic nor a numeric profile");

    write_file(out_path(cfg, "limits.csv"), csv.str());
    write_manifest(cfg, {"limits.csv"});
    if (have_analytic && have_numeric)
        std::printf("limits: analytic vs numeric sup|gamma| disagreement %.3e\n",
                    sup_disagreement);
    return 0;
}

int cmd_evl(const RunConfig& cfg) {
    const CFSpec spec = parse_spec(cfg.spec_text);
    const LimitProfile pr = profile_for(spec, cfg.jmax);
    const StepSurvival h = limiting_survival(pr);

    std::ostringstream csv;
    csv << "j,breakpoint,value\n";
    for (std::size_t j = 0; j < h.values.size(); ++j)
        csv << j << "," << ext_to_csv(h.breakpoints[j]) << "," << ext_to_csv(h.values[j]) << "\n";
    if (h.breakpoints.size() > h.values.size())
        csv << h.values.size() << "," << ext_to_csv(h.breakpoints.back()) << ",\n";
    write_file(out_path(cfg, "evl.csv"), csv.str());

    // staircase plot, with the hyperbola envelopes for constant type
    double xmax = 8;
    try {
        const ExtReal g4 = h.breakpoint_at(4);
        if (g4.is_finite()) xmax = std::max(2.0, g4.to_double() * 1.05);
    } catch (const ProfileIncomplete&) {
    }
    SvgPlot plot(0, xmax, 0, 1.25, "H(y) = P(M > y)  [" + cfg.spec_text + "]");
    plot.segment(0, 1, 1, 1, "black");
    double prev_x = 1;
    for (int j = 0;; ++j) {
        ExtReal bp, v;
        try {
            bp = h.breakpoint_at(j + 1);
            v = h.value_at(j);
        } catch (const ProfileIncomplete&) {
            break;
        }
        const double x1 = bp.is_finite() ? std::min(bp.to_double(), xmax) : xmax;
        plot.segment(prev_x, v.to_double(), x1, v.to_double(), "black");
        if (!bp.is_finite() || bp.to_double() > xmax) break;
        prev_x = x1;
    }
    if (pr.geometric_ratio) {
        // dotted envelopes C/y and C/(alpha y), C = value at the first plateau
        const double c = h.value_at(0).to_double();
        const double a = pr.geometric_ratio->to_double();
        std::vector<std::pair<double, double>> up, down;
        for (int i = 0; i <= 200; ++i) {
            const double y = 0.6 + (xmax - 0.6) * i / 200.0;
            down.emplace_back(y, c / y);
            up.emplace_back(y, c / (a * y));
        }
        plot.polyline(down, "gray", true);
        plot.polyline(up, "gray", true);
    }
    write_file(out_path(cfg, "evl.svg"), plot.render());
    write_manifest(cfg, {"evl.csv", "evl.svg"});
    return 0;
}

int cmd_entry_dist(const RunConfig& cfg) {
    const CFSpec spec = parse_spec(cfg.spec_text);
    const int k = resolve_k(spec, cfg.k);
    auto table = ConvergentTable::build(spec, k + 2);
    const Int qk1 = table.q(k + 1);
    if (qk1 > 200000)
        throw ConfigError("entry-dist: q_{k+1} = " + qk1.get_str() +
                          " too large for a full oracle sweep; pick a smaller k");
    const long n_max = qk1.get_si();

    // tighten the entry-law enclosures to the oracle's resolution
    {
        Rational target(1);
        target /= Int("10000000000000000000000"); // 1e-22
        target /= Rational(table.q(k) * qk1 * 2);
        table = table.refined_for_alpha_width(target);
    }
    const auto oracle = arcset_entry_measures(table, k, n_max);

    const long stride = std::max(1L, n_max / 4096);
    std::ostringstream csv;
    csv << "s,exact_lo,exact_hi,oracle_lo,oracle_hi,overlap\n";
    long flagged = 0;
    auto emit_row = [&](long s) {
        const RatInterval exact = entry_cdf_exact(table, k, Rational(s));
        if (s == 0) {
            csv << "0," << fmt_val(0.0, 15) << "," << fmt_val(0.0, 15) << ","
                << fmt_val(0.0, 15) << "," << fmt_val(0.0, 15) << ",yes\n";
            return;
        }
        const RatInterval& orc = oracle[static_cast<std::size_t>(s - 1)];
        const bool ok = exact.overlaps(orc);
        if (!ok) ++flagged;
        csv << s << "," << fmt_val(exact.lo().get_d(), 15) << ","
            << fmt_val(exact.hi().get_d(), 15) << "," << fmt_val(orc.lo().get_d(), 15) << ","
            << fmt_val(orc.hi().get_d(), 15) << "," << (ok ? "yes" : "NO") << "\n";
    };
    emit_row(0);
    for (long s = 1; s <= n_max; s += stride) emit_row(s);
    if ((n_max - 1) % stride != 0) emit_row(n_max);

    write_file(out_path(cfg, "entry_dist.csv"), csv.str());
    write_manifest(cfg, {"entry_dist.csv"});
    std::printf("entry-dist: k=%d, %ld preimages, %ld non-overlapping rows\n", k, n_max, flagged);
    return flagged == 0 ? 0 : 1;
}

int cmd_compare(const RunConfig& cfg, ComparisonReport* out) {
    const CFSpec spec = parse_spec(cfg.spec_text);
    const int k = resolve_k(spec, cfg.k);
    const LimitProfile pr = profile_for(spec, cfg.jmax);
    const StepSurvival h = limiting_survival(pr);
    const auto grid = resolve_grid(cfg.grid_text, h);

    int depth = k + 16;
    if (auto avail = spec.available_depth()) depth = std::min(depth, *avail - 2);
    auto table = ConvergentTable::build(spec, depth);

    SamplingOptions sopts;
    sopts.threads = cfg.threads;
    const EmpiricalSurvival emp =
        empirical_survival(table, k, cfg.n_samples, cfg.seed, grid, sopts);

    ComparisonReport rep;
    rep.k = k;
    rep.aborted = emp.aborted;
    std::ostringstream csv;
    csv << "y,H_limit,H_finite_k,H_empirical,n_samples,k,seed\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ComparisonRow row;
        row.y = grid[i];
        row.h_limit = h.eval(grid[i]).to_double();
        row.h_finite = finite_k_survival(table, k, grid[i]).mid().get_d();
        row.h_empirical = emp.estimate(i);
        rep.rows.push_back(row);
        rep.sup_emp_vs_finite =
            std::max(rep.sup_emp_vs_finite, std::abs(row.h_empirical - row.h_finite));
        rep.sup_emp_vs_limit =
            std::max(rep.sup_emp_vs_limit, std::abs(row.h_empirical - row.h_limit));
        rep.sup_finite_vs_limit =
            std::max(rep.sup_finite_vs_limit, std::abs(row.h_finite - row.h_limit));
        csv << fmt_val(row.y.get_d(), 12) << "," << fmt_val(row.h_limit) << ","
            << fmt_val(row.h_finite) << "," << fmt_val(row.h_empirical) << "," << cfg.n_samples
            << "," << k << "," << cfg.seed << "\n";
    }
    rep.passed = rep.sup_emp_vs_finite <= cfg.tol_emp_finite &&
                 rep.sup_emp_vs_limit <= cfg.tol_emp_limit && rep.aborted == 0;

    write_file(out_path(cfg, "compare.csv"), csv.str());
    ordered_json rj;
    rj["k"] = rep.k;
    rj["q_k"] = table.q(k).get_str();
    rj["sup_emp_vs_finite"] = rep.sup_emp_vs_finite;
    rj["sup_emp_vs_limit"] = rep.sup_emp_vs_limit;
    rj["sup_finite_vs_limit"] = rep.sup_finite_vs_limit;
    rj["aborted_samples"] = rep.aborted;
    rj["tolerance_emp_vs_finite"] = cfg.tol_emp_finite;
    rj["tolerance_emp_vs_limit"] = cfg.tol_emp_limit;
    rj["passed"] = rep.passed;
    write_file(out_path(cfg, "report.json"), rj.dump(2) + "\n");
    write_manifest(cfg, {"compare.csv", "report.json"});

    if (cfg.plot) {
        double xmax = grid.back().get_d() * 1.05;
        SvgPlot plot(0, xmax, 0, 1.25, "compare [" + cfg.spec_text + ", k=" + std::to_string(k) + "]");
        std::vector<std::pair<double, double>> le, fe, ee;
        for (const auto& r : rep.rows) {
            le.emplace_back(r.y.get_d(), r.h_limit);
            fe.emplace_back(r.y.get_d(), r.h_finite);
            ee.emplace_back(r.y.get_d(), r.h_empirical);
        }
        plot.polyline(le, "black");
        plot.polyline(fe, "blue", true);
        plot.polyline(ee, "red", true);
        write_file(out_path(cfg, "compare.svg"), plot.render());
    }

    std::printf("compare: k=%d q_k=%s sup|emp-fin|=%.4f sup|emp-lim|=%.4f aborted=%lld -> %s\n",
                k, table.q(k).get_str().c_str(), rep.sup_emp_vs_finite, rep.sup_emp_vs_limit,
                static_cast<long long>(rep.aborted), rep.passed ? "PASS" : "FAIL");
    if (out) *out = rep;
    return rep.passed ? 0 : 1;
}

int cmd_phi(const RunConfig& cfg) {
    const CFSpec spec = parse_spec(cfg.spec_text);
    const LimitProfile pr = profile_for(spec, cfg.jmax);

    std::ostringstream csv;
    csv << "j,y_probe,knot1_x,knot1_F,knot2_x,knot2_F,knot3_x,knot3_F,g,phi_of_g,abs_diff,"
           "diagonal_exact,fixed_point_pass\n";
    int emitted = 0;
    for (int j = 0; j + 1 <= pr.jmax; ++j) {
        ExtReal gj, gj1;
        try {
            gj = pr.gamma_at(j);
            gj1 = pr.gamma_at(j + 1);
        } catch (const ProfileIncomplete&) {
            break;
        }
        if (!gj.is_finite() || !gj1.is_finite()) break;
        const double lo = gj.to_double(), hi = gj1.to_double();
        if (!(hi > lo)) continue; // duplicate breakpoints: empty plateau
        const Rational y = rational_from_double(lo + (hi - lo) / 2);
        PiecewiseLinearCDF cdf;
        FixedPointReport fp;
        try {
            cdf = phi_y(pr, j);
            fp = fixed_point_check(pr, y);
        } catch (const ProfileIncomplete&) {
            continue;
        }
        ++emitted;
        csv << j << "," << fmt_val(y.get_d()) << ",";
        for (const auto& kn : cdf.knots)
            csv << fmt_val(kn.first.to_double()) << "," << fmt_val(kn.second.to_double()) << ",";
        csv << fmt_val(fp.g) << "," << fmt_val(fp.phi_of_g) << "," << fmt_val(fp.abs_diff, 15)
            << "," << (fp.diagonal_exact ? "yes" : "no") << "," << (fp.passed() ? "yes" : "no")
            << "\n";
    }
    if (emitted == 0) throw ConfigError("phi: no finite plateau with a defined phi_y");
    write_file(out_path(cfg, "phi.csv"), csv.str());
    write_manifest(cfg, {"phi.csv"});
    return 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const PrecisionExhausted*>(&e) || dynamic_cast<const DepthExceeded*>(&e))
        return 3;
    return 2;
}

} // namespace rotevl::harness
