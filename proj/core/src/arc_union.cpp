#include "rotevl/arc_union.hpp"

#include <map>

namespace rotevl {

namespace {

/// Exact point on the line: u + v*alpha with integer u, v. Translates of the
/// B_k endpoints stay in this form, so all overlap decisions are exact sign
/// computations against a refinable enclosure of alpha.
struct ZLin {
    Int u, v;

    ZLin() : u(0), v(0) {}
    ZLin(Int uu, Int vv) : u(std::move(uu)), v(std::move(vv)) {}

    ZLin operator+(const ZLin& o) const { return {u + o.u, v + o.v}; }
    ZLin operator-(const ZLin& o) const { return {u - o.u, v - o.v}; }
    bool identical(const ZLin& o) const { return u == o.u && v == o.v; }
};

class AlphaContext {
public:
    explicit AlphaContext(ConvergentTable table) : table_(std::move(table)) {}

    int sign(const ZLin& f) {
        if (sgn(f.v) == 0) return sgn(f.u);
        for (;;) {
            const RatInterval a = table_.alpha();
            const Rational fu(f.u), fv(f.v);
            const Rational lo = fu + fv * (sgn(f.v) > 0 ? a.lo() : a.hi());
            const Rational hi = fu + fv * (sgn(f.v) > 0 ? a.hi() : a.lo());
            if (sgn(lo) > 0) return 1;
            if (sgn(hi) < 0) return -1;
            table_ = table_.refined(table_.alpha_depth()); // throws when exhausted
        }
    }

    bool less(const ZLin& a, const ZLin& b) {
        if (a.identical(b)) return false;
        return sign(a - b) < 0;
    }

    Int floor_of(const ZLin& f) {
        if (sgn(f.v) == 0) return f.u; // endpoints here are integers when v = 0
        const RatInterval a = table_.alpha();
        Int m = floor_int(Rational(f.u) + Rational(f.v) * a.mid());
        while (sign(f - ZLin(m, 0)) < 0) --m;
        while (sign(f - ZLin(m + 1, 0)) >= 0) ++m;
        return m;
    }

    RatInterval enclosure(const ZLin& f, const Rational& max_width) {
        if (sgn(f.v) != 0) {
            Rational target = max_width / Rational(abs(f.v));
            if (table_.alpha().width() > target)
                table_ = table_.refined_for_alpha_width(target);
        }
        const RatInterval a = table_.alpha();
        return RatInterval(Rational(f.u)) + Rational(f.v) * a;
    }

    const ConvergentTable& table() const { return table_; }

private:
    ConvergentTable table_;
};

struct ZLinLess {
    AlphaContext* ctx;
    bool operator()(const ZLin& a, const ZLin& b) const { return ctx->less(a, b); }
};

/// Incremental union of arcs on the circle with exact endpoints.
class CircleUnion {
public:
    explicit CircleUnion(AlphaContext& ctx) : ctx_(&ctx), arcs_(ZLinLess{&ctx}) {}

    /// Insert the open arc (left, left+len) reduced mod 1 (split at 1).
    void insert(const ZLin& left, const ZLin& len) {
        const Int fl = ctx_->floor_of(left);
        const ZLin L = left - ZLin(fl, 0);
        const ZLin R = L + len;
        if (ctx_->sign(R - ZLin(1, 0)) > 0) {
            insert_piece(L, ZLin(1, 0));
            insert_piece(ZLin(0, 0), R - ZLin(1, 0));
        } else {
            insert_piece(L, R);
        }
    }

    const ZLin& measure() const { return total_; }

    std::vector<std::pair<ZLin, ZLin>> arcs() const {
        return {arcs_.begin(), arcs_.end()};
    }

private:
    void insert_piece(ZLin L, ZLin R) {
        auto it = arcs_.lower_bound(L);
        if (it != arcs_.begin()) {
            auto prev = std::prev(it);
            if (ctx_->sign(prev->second - L) >= 0) it = prev; // overlaps from the left
        }
        while (it != arcs_.end() && ctx_->sign(it->first - R) <= 0) {
            if (ctx_->sign(it->second - R) > 0) R = it->second;
            if (ctx_->sign(L - it->first) > 0) L = it->first;
            total_ = total_ - (it->second - it->first);
            it = arcs_.erase(it);
        }
        arcs_.emplace(L, R);
        total_ = total_ + (R - L);
    }

    AlphaContext* ctx_;
    std::map<ZLin, ZLin, ZLinLess> arcs_;
    ZLin total_;
};

/// Left endpoint and length of B_k in the u + v*alpha form, using
/// eta_m = (-1)^m (q_m alpha - p_m).
std::pair<ZLin, ZLin> b_arc_form(const ConvergentTable& t, int k) {
    const Int pk = t.p(k), qk = t.q(k);
    const Int pk1 = t.p(k + 1), qk1 = t.q(k + 1);
    ZLin left, len;
    if (k % 2 == 0) {
        left = ZLin(-pk1, qk1);            // -eta_{k+1} = -(p_{k+1} - q_{k+1} alpha)
        len = ZLin(pk1 - pk, qk - qk1);    // eta_k + eta_{k+1}
    } else {
        left = ZLin(-pk, qk);              // -eta_k = -(p_k - q_k alpha)
        len = ZLin(pk - pk1, qk1 - qk);
    }
    return {left, len};
}

long checked_steps(const ConvergentTable& table, int k, const Int& n) {
    if (n < 1) throw ConfigError("arc oracle: n must be >= 1");
    if (k + 1 > table.depth()) throw DepthExceeded("arc oracle: k+1 exceeds table depth");
    if (n > table.q(k + 1))
        throw ConfigError("arc oracle: n beyond q_{k+1} (the union is already full)");
    if (!n.fits_slong_p() || n.get_si() > 20000000)
        throw Error("arc oracle: n too large for an explicit arc sweep");
    return n.get_si();
}

} // namespace

RatInterval ArcSet::measure() const {
    RatInterval total;
    for (const auto& a : arcs) total += a.length();
    return total;
}

std::vector<RatInterval> arcset_entry_measures(const ConvergentTable& table, int k, long n_max) {
    const long steps = checked_steps(table, k, Int(n_max));
    AlphaContext ctx(table);
    CircleUnion uni(ctx);
    const auto [left0, len] = b_arc_form(table, k);
    std::vector<ZLin> measures;
    measures.reserve(static_cast<std::size_t>(steps));
    for (long j = 1; j <= steps; ++j) {
        // T^{-j} B_k = B_k - j alpha
        uni.insert(left0 - ZLin(0, j), len);
        measures.push_back(uni.measure());
    }
    // one tight alpha refinement serves every conversion
    Rational width_target(1);
    width_target /= Int("10000000000000000000000"); // 1e-22
    std::vector<RatInterval> out;
    out.reserve(measures.size());
    for (const auto& m : measures) out.push_back(ctx.enclosure(m, width_target));
    return out;
}

RatInterval arcset_entry_oracle(const ConvergentTable& table, int k, const Int& n) {
    const long steps = checked_steps(table, k, n);
    return arcset_entry_measures(table, k, steps).back();
}

ArcSet entry_preimage_arcs(const ConvergentTable& table, int k, const Int& n) {
    const long steps = checked_steps(table, k, n);
    AlphaContext ctx(table);
    CircleUnion uni(ctx);
    const auto [left0, len] = b_arc_form(table, k);
    for (long j = 1; j <= steps; ++j) uni.insert(left0 - ZLin(0, j), len);
    Rational width_target(1);
    width_target /= Int("10000000000000000000000");
    ArcSet out;
    for (const auto& [l, r] : uni.arcs()) {
        const RatInterval li = ctx.enclosure(l, width_target);
        const RatInterval ri = ctx.enclosure(r, width_target);
        out.arcs.push_back(Arc{li, ri});
    }
    return out;
}

} // namespace rotevl
