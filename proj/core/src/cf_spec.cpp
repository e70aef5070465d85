#include "rotevl/cf_spec.hpp"

#include <algorithm>
#include <limits>

namespace rotevl {

namespace {

void validate(const SpecKind& kind) {
    if (const auto* e = std::get_if<ExplicitTerms>(&kind)) {
        if (e->terms.empty()) throw ConfigError("explicit spec: empty term list");
        for (auto c : e->terms)
            if (c < 1) throw ConfigError("explicit spec: partial quotients must be >= 1");
    } else if (const auto* p = std::get_if<EventuallyPeriodic>(&kind)) {
        if (p->period.empty()) throw ConfigError("periodic spec: empty period");
        for (auto c : p->preperiod)
            if (c < 1) throw ConfigError("periodic spec: partial quotients must be >= 1");
        for (auto c : p->period)
            if (c < 1) throw ConfigError("periodic spec: partial quotients must be >= 1");
    } else if (const auto* b = std::get_if<BlockFamily>(&kind)) {
        if (b->block_len < 1) throw ConfigError("block spec: block length must be >= 1");
    } else if (const auto* a = std::get_if<AffineRule>(&kind)) {
        if (a->slope == 0 && a->offset < 1)
            throw ConfigError("affine spec: constant rule needs offset >= 1");
        // keep slope*n + offset inside 64 bits for any reachable index
        if (a->slope > (1ull << 40) || a->offset > (1ull << 40))
            throw ConfigError("affine spec: coefficients too large");
    }
}

} // namespace

CFSpec::CFSpec(SpecKind kind, int max_depth) : kind_(std::move(kind)), max_depth_(max_depth) {
    if (max_depth_ < 1) throw ConfigError("CFSpec: max_depth must be positive");
    validate(kind_);
}

std::uint64_t CFSpec::term(int i) const {
    if (i < 1) throw ConfigError("CFSpec::term: index starts at 1");
    if (const auto* e = std::get_if<ExplicitTerms>(&kind_)) {
        if (static_cast<std::size_t>(i) > e->terms.size())
            throw DepthExceeded("explicit spec has only " + std::to_string(e->terms.size()) +
                                " terms, asked for term " + std::to_string(i));
        return e->terms[static_cast<std::size_t>(i - 1)];
    }
    if (const auto* p = std::get_if<EventuallyPeriodic>(&kind_)) {
        const auto pre = p->preperiod.size();
        if (static_cast<std::size_t>(i) <= pre) return p->preperiod[static_cast<std::size_t>(i - 1)];
        const auto off = (static_cast<std::size_t>(i) - pre - 1) % p->period.size();
        return p->period[off];
    }
    if (const auto* b = std::get_if<BlockFamily>(&kind_)) {
        const int n = b->block_len;
        if (i % n != 0) return 1;
        return static_cast<std::uint64_t>(i / n) + 1;
    }
    const auto& a = std::get<AffineRule>(kind_);
    return a.slope * static_cast<std::uint64_t>(i) + a.offset;
}

std::optional<int> CFSpec::available_depth() const {
    if (const auto* e = std::get_if<ExplicitTerms>(&kind_))
        return static_cast<int>(e->terms.size());
    return std::nullopt;
}

KSubsequence CFSpec::default_subsequence() const {
    if (const auto* b = std::get_if<BlockFamily>(&kind_); b && b->block_len > 1)
        return KArithmetic{b->block_len, 0};
    return KAll{};
}

bool CFSpec::k_in_subsequence(int k) const {
    const auto sub = default_subsequence();
    if (std::holds_alternative<KAll>(sub)) return true;
    const auto& ap = std::get<KArithmetic>(sub);
    return k >= 0 && (k - ap.offset) % ap.step == 0;
}

std::vector<int> k_indices(const KSubsequence& sub, int k_lo, int k_hi) {
    std::vector<int> out;
    if (const auto* l = std::get_if<KList>(&sub)) {
        for (int k : l->ks)
            if (k >= k_lo && k <= k_hi) out.push_back(k);
        std::sort(out.begin(), out.end());
        return out;
    }
    int step = 1, offset = 0;
    if (const auto* ap = std::get_if<KArithmetic>(&sub)) {
        step = ap->step;
        offset = ap->offset;
    }
    for (int k = k_lo; k <= k_hi; ++k)
        if ((k - offset) % step == 0) out.push_back(k);
    return out;
}

} // namespace rotevl
