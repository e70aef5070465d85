#include "rotevl/sampling.hpp"

#include <algorithm>
#include <memory>
#include <thread>

namespace rotevl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Exact sign decisions for x + j*alpha against arc boundaries; used when
/// the fixed-resolution fast path cannot decide. All decisions are exact,
/// so results do not depend on which thread runs them.
class SlowDecider {
public:
    SlowDecider(const CFSpec& spec, int depth, Rational x)
        : spec_(spec), table_(ConvergentTable::build(spec, depth)), x_(std::move(x)) {}

    void ensure_depth(int k) {
        if (k > table_.depth()) {
            int target = std::max(k + 8, table_.depth());
            if (auto avail = spec_.available_depth()) target = std::min(target, *avail - 2);
            if (target < k) throw DepthExceeded("orbit wandered past the spec's term budget");
            table_ = ConvergentTable::build(spec_, target)
                         .refined_for_alpha_width(table_.alpha().width());
        }
    }

    /// sign of (u + v*alpha), v integer, u rational; refines alpha until
    /// decided (throws PrecisionExhausted at the spec's depth budget).
    int sign(const Rational& u, const Int& v) {
        if (sgn(v) == 0) return sgn(u);
        for (;;) {
            const RatInterval a = table_.alpha();
            const Rational va(v);
            const Rational lo = u + va * (sgn(v) > 0 ? a.lo() : a.hi());
            const Rational hi = u + va * (sgn(v) > 0 ? a.hi() : a.lo());
            if (sgn(lo) > 0) return 1;
            if (sgn(hi) < 0) return -1;
            table_ = table_.refined(table_.alpha_depth());
        }
    }

    /// Exact membership of x + j*alpha (mod 1) in B_level.
    bool in_arc(long j, int level) {
        ensure_depth(level + 1);
        const Int jv(j);
        // reduce to g = x + j*alpha - floor(.) in [0,1)
        Int fl = floor_int(x_ + Rational(jv) * table_.alpha().mid());
        while (sign(x_ - Rational(fl), jv) < 0) --fl;
        while (sign(x_ - Rational(fl + 1), jv) >= 0) ++fl;
        const Rational g0 = x_ - Rational(fl); // g = g0 + j*alpha

        const bool even = (level % 2 == 0);
        const Int& pr = even ? table_.p(level) : table_.p(level + 1);
        const Int& qr = even ? table_.q(level) : table_.q(level + 1);
        const Int& pl = even ? table_.p(level + 1) : table_.p(level);
        const Int& ql = even ? table_.q(level + 1) : table_.q(level);
        // right radius R = q_r alpha - p_r (even index), left radius
        // L = p_l - q_l alpha (odd index); g < R or g > 1 - L means inside
        const int cmp_right = sign(g0 + Rational(pr), jv - qr);
        if (cmp_right < 0) return true;
        const int cmp_left = sign(g0 - 1 + Rational(pl), jv - ql);
        return cmp_left > 0;
    }

    const ConvergentTable& table() const { return table_; }

private:
    CFSpec spec_;
    ConvergentTable table_;
    Rational x_;
};

struct LevelBounds {
    Int r_lo, r_hi;            // scaled right radius
    Int d_minus_l_lo, d_plus_r_lo, d_minus_l_hi;
};

} // namespace

EmpiricalSurvival empirical_survival(const ConvergentTable& table, int k,
                                     std::int64_t n_samples, std::uint64_t seed,
                                     std::vector<Rational> y_grid, const SamplingOptions& opts) {
    if (n_samples < 1) throw ConfigError("empirical_survival: n_samples must be >= 1");
    if (y_grid.empty()) throw ConfigError("empirical_survival: empty y grid");
    if (!std::is_sorted(y_grid.begin(), y_grid.end()))
        throw ConfigError("empirical_survival: y grid must be sorted");
    if (k < 0 || k > table.depth()) throw DepthExceeded("empirical_survival: k out of range");

    const Int qk = table.q(k);
    if (!qk.fits_slong_p() || qk.get_si() > opts.max_orbit_steps)
        throw Error("empirical_survival: q_k = " + qk.get_str() +
                    " orbit steps exceed the step budget");
    const long n = qk.get_si();

    // working table: headroom above k for the observable's level walk
    int kwork = k + 24;
    if (auto avail = table.spec().available_depth()) kwork = std::min(kwork, *avail - 2);
    if (kwork < k + 2) throw DepthExceeded("empirical_survival: spec too short for level walk");
    ConvergentTable base = ConvergentTable::build(table.spec(), kwork);
    {
        Rational target = base.eta(kwork).lo();
        target /= 8 * n;
        base = base.refined_for_alpha_width(target);
    }

    // exact fixed-denominator scaling: D = q_{A-1} q_A * 2^65
    const RatInterval alpha = base.alpha();
    const Int d0 = alpha.lo().get_den() * alpha.hi().get_den();
    const Int two65 = Int(1) << 65;
    const Int d = d0 * two65;
    auto scale_exact = [&](const Rational& r) {
        Int s = d / r.get_den();
        return Int(r.get_num() * s);
    };
    const Int a_lo = scale_exact(alpha.lo());
    const Int a_hi = scale_exact(alpha.hi());

    std::vector<LevelBounds> bounds;
    bounds.reserve(static_cast<std::size_t>(kwork));
    for (int l = 0; l < kwork; ++l) {
        const bool even = (l % 2 == 0);
        auto eta_scaled = [&](int m) {
            // eta_m = (-1)^m (q_m alpha - p_m), scaled by d
            if (m % 2 == 0)
                return std::pair<Int, Int>{base.q(m) * a_lo - base.p(m) * d,
                                           base.q(m) * a_hi - base.p(m) * d};
            return std::pair<Int, Int>{base.p(m) * d - base.q(m) * a_hi,
                                       base.p(m) * d - base.q(m) * a_lo};
        };
        const auto [rl, rh] = eta_scaled(even ? l : l + 1);
        const auto [ll, lh] = eta_scaled(even ? l + 1 : l);
        bounds.push_back(LevelBounds{rl, rh, d - ll, d + rl, d - lh});
    }

    // exceedance thresholds: M > y q_k  <=>  M >= floor(y q_k) + 1
    const std::size_t grid_n = y_grid.size();
    std::vector<Int> min_m(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i) min_m[i] = floor_int(y_grid[i] * Rational(qk)) + 1;

    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min({threads, 64, static_cast<int>(n_samples)}));

    struct WorkerOut {
        std::vector<std::int64_t> hist; // hist[i]: samples whose M reaches exactly bin i
        std::int64_t no_hit = 0;
        std::int64_t aborted = 0;
    };
    std::vector<WorkerOut> outs(static_cast<std::size_t>(threads));
    for (auto& o : outs) o.hist.assign(grid_n, 0);

    auto worker = [&](int t) {
        WorkerOut& out = outs[static_cast<std::size_t>(t)];
        const std::int64_t chunk = (n_samples + threads - 1) / threads;
        const std::int64_t lo_idx = t * chunk;
        const std::int64_t hi_idx = std::min<std::int64_t>(n_samples, lo_idx + chunk);

        Int zlo, zhi, best;
        for (std::int64_t idx = lo_idx; idx < hi_idx; ++idx) {
            const std::uint64_t u = splitmix64(seed + 0x9E3779B97F4A7C15ull *
                                                          static_cast<std::uint64_t>(idx + 1));
            // x = (2u+1)/2^65: odd numerator, so orbit points never hit
            // an arc endpoint exactly
            const Int xnum = (Int(u) * 2 + 1) * d0;
            Rational xrat(Int(u) * 2 + 1, two65);
            xrat.canonicalize();
            std::unique_ptr<SlowDecider> slow; // per sample: it captures x

            zlo = xnum;
            zhi = xnum;
            best = 0;
            int m_thr = -1; // deepest level with q <= best
            bool abort_sample = false;

            auto slow_member = [&](long j, int level) {
                if (!slow) slow = std::make_unique<SlowDecider>(table.spec(), kwork, xrat);
                return slow->in_arc(j, level);
            };

            for (long j = 1; j <= n && !abort_sample; ++j) {
                zlo += a_lo;
                zhi += a_hi;
                if (zlo >= d) {
                    zlo -= d;
                    zhi -= d;
                }
                auto member = [&](int level) -> bool {
                    const LevelBounds& b = bounds[static_cast<std::size_t>(level)];
                    if (zhi < b.r_lo) return true;
                    if (zlo > b.d_minus_l_lo && zhi < b.d_plus_r_lo) return true;
                    if (zlo >= b.r_hi && zhi <= b.d_minus_l_hi) return false;
                    return slow_member(j, level);
                };
                try {
                    const int start = m_thr < 0 ? 0 : m_thr;
                    int lev;
                    if (member(start)) {
                        lev = start + 1;
                        while (lev < kwork && member(lev)) ++lev;
                    } else if (m_thr < 0) {
                        lev = 0; // first evaluation: the point exits at level 0
                    } else {
                        continue; // outside B_{m_thr}: cannot improve the maximum
                    }
                    Int qx;
                    if (lev >= kwork) {
                        // very deep hit: walk exactly with the slow decider
                        while (slow_member(j, lev)) ++lev;
                        qx = slow->table().q(lev);
                    } else {
                        qx = base.q(lev);
                    }
                    if (qx > best) {
                        best = qx;
                        while (m_thr + 1 < kwork && base.q(m_thr + 1) <= best) ++m_thr;
                    }
                } catch (const Error&) {
                    abort_sample = true;
                }
            }

            if (abort_sample) {
                ++out.aborted;
                continue;
            }
            // rightmost grid index whose threshold the maximum reaches
            int imax = -1;
            for (std::size_t i = 0; i < grid_n; ++i) {
                if (best >= min_m[i])
                    imax = static_cast<int>(i);
                else
                    break;
            }
            if (imax >= 0)
                ++out.hist[static_cast<std::size_t>(imax)];
            else
                ++out.no_hit;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    EmpiricalSurvival out;
    out.y_grid = std::move(y_grid);
    out.n_samples = n_samples;
    out.seed = seed;
    out.k = k;
    out.counts.assign(grid_n, 0);
    for (const auto& w : outs) {
        out.aborted += w.aborted;
        for (std::size_t i = 0; i < grid_n; ++i) out.counts[i] += w.hist[i];
    }
    // counts[i] = #samples with M >= min_m[i]: suffix sums of the histogram
    for (std::size_t i = grid_n - 1; i-- > 0;) out.counts[i] += out.counts[i + 1];
    return out;
}

} // namespace rotevl
