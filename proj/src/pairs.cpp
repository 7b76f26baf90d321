#include "cmclab/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cmclab {

CmcClass CmcClass::arl(MoebiusElement f) {
    CmcClass c;
    c.family = Family::Arl;
    c.precompose = std::move(f);
    return c;
}

CmcClass CmcClass::helicoid(MoebiusElement f) {
    CmcClass c;
    c.family = Family::Helicoid;
    c.precompose = std::move(f);
    return c;
}

CmcClass CmcClass::cylinder(double k) {
    CmcClass c;
    c.family = Family::Cylinder;
    c.k = k;
    return c;
}

CmcClass CmcClass::slice() {
    CmcClass c;
    c.family = Family::Slice;
    return c;
}

bool PmcBucket::operator==(const PmcBucket& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::B_M || kind == Kind::B_EtaM) return s == o.s;
    return true;
}

std::string PmcBucket::to_string() const {
    switch (kind) {
        case Kind::ProductOfCurves: return "ProductOfCurves";
        case Kind::CmcInSliceArl: return "CmcInSlice(Arl)";
        case Kind::CmcInSliceHelicoid: return "CmcInSlice(Helicoid)";
        case Kind::TorralboUrbano: return "TorralboUrbano";
        case Kind::A_Id: return "A_Id";
        case Kind::A_Zeta: return "A_Zeta";
        case Kind::B_Eta: return "B_Eta";
        case Kind::B_M: return "B_M(" + cmclab::to_string(*s) + ")";
        case Kind::B_EtaM: return "B_EtaM(" + cmclab::to_string(*s) + ")";
    }
    return "?";
}

std::optional<StabilizerDescriptor> PmcBucket::stabilizer_descriptor() const {
    switch (kind) {
        case Kind::A_Id: return stabilizer(PairKind::A(XYClass::IdClass));
        case Kind::A_Zeta: return stabilizer(PairKind::A(XYClass::ZetaClass));
        case Kind::B_Eta: return stabilizer(PairKind::B({CanonicalRep::Tag::Eta, 0}));
        case Kind::B_M: return stabilizer(PairKind::B({CanonicalRep::Tag::M, *s}));
        case Kind::B_EtaM: return stabilizer(PairKind::B({CanonicalRep::Tag::EtaM, *s}));
        default: return std::nullopt;
    }
}

namespace {

// Representation-independent residual for a helicoid pair: the smaller of
// the canonical forms of f2 f1^{-1} and its inverse. Swapping the unordered
// pair inverts the residual, so this makes the bucket symmetric.
CanonicalRep helicoid_residual(const MoebiusElement& f1, const MoebiusElement& f2) {
    const CanonicalRep r1 = canonical_yy(compose(f2, inverse(f1)));
    const CanonicalRep r2 = canonical_yy(compose(f1, inverse(f2)));
    return std::min(r1, r2);
}

} // namespace

PmcBucket classify_pair(int c, const CmcClass& first, const CmcClass& second) {
    if (c != 1 && c != -1) throw ParameterError("classify_pair: c must be +1 or -1");
    using F = CmcClass::Family;
    if (first.family == F::Slice || second.family == F::Slice)
        throw UnreachableBucketError("classify_pair: slices are minimal, outside the H > 0 scope");
    if (c == 1) {
        if (first.family != F::Cylinder || second.family != F::Cylinder)
            throw UnreachableBucketError("classify_pair: only cylinder pairs occur at c = +1");
    }
    if ((first.family == F::Cylinder) != (second.family == F::Cylinder))
        throw UnreachableBucketError(
            "classify_pair: cylinder data (K = 0) cannot pair with K < 0 data");

    if (first.family == F::Cylinder) {
        PmcBucket b;
        b.kind = PmcBucket::Kind::ProductOfCurves;
        b.mean_curvature = std::sqrt(first.k * first.k + second.k * second.k) / 2.0;
        return b;
    }

    if (first.family == F::Arl && second.family == F::Arl) {
        PmcBucket b;
        const bool same = in_GX(compose(second.precompose, inverse(first.precompose)));
        b.kind = same ? PmcBucket::Kind::CmcInSliceArl : PmcBucket::Kind::TorralboUrbano;
        return b;
    }

    if (first.family != second.family) {
        // mixed (helicoid, arl): normalize the helicoid factor to the identity
        const MoebiusElement& fy =
            first.family == F::Helicoid ? first.precompose : second.precompose;
        const MoebiusElement& fx = first.family == F::Arl ? first.precompose : second.precompose;
        const MoebiusElement residual = compose(fx, inverse(fy));
        PmcBucket b;
        b.kind = class_xy(residual) == XYClass::IdClass ? PmcBucket::Kind::A_Id
                                                        : PmcBucket::Kind::A_Zeta;
        return b;
    }

    // helicoid pair
    const MoebiusElement f = compose(second.precompose, inverse(first.precompose));
    if (in_GY(f)) {
        PmcBucket b;
        b.kind = PmcBucket::Kind::CmcInSliceHelicoid;
        return b;
    }
    const CanonicalRep rep = helicoid_residual(first.precompose, second.precompose);
    PmcBucket b;
    switch (rep.tag) {
        case CanonicalRep::Tag::Eta: b.kind = PmcBucket::Kind::B_Eta; break;
        case CanonicalRep::Tag::M:
            b.kind = PmcBucket::Kind::B_M;
            b.s = rep.s;
            break;
        case CanonicalRep::Tag::EtaM:
            b.kind = PmcBucket::Kind::B_EtaM;
            b.s = rep.s;
            break;
        case CanonicalRep::Tag::Id:
            throw std::logic_error("classify_pair: Id canonical form outside G_Y");
    }
    return b;
}

double normal_curvature(double nu1, double nu2) {
    if (std::abs(nu1) > 1.0 || std::abs(nu2) > 1.0)
        throw ParameterError("normal_curvature: |nu| <= 1 required");
    return (nu2 * nu2 - nu1 * nu1) / 2.0;
}

DataQuadruple act_G1(const DataQuadruple& q) {
    DataQuadruple r;
    r.nu1 = -q.nu2;
    r.dh1 = -q.dh2;
    r.nu2 = -q.nu1;
    r.dh2 = -q.dh1;
    r.base1 = q.base2;
    r.base2 = q.base1;
    return r;
}

DataQuadruple act_G2(const DataQuadruple& q) {
    DataQuadruple r;
    r.nu1 = q.nu2;
    r.dh1 = q.dh2;
    r.nu2 = q.nu1;
    r.dh2 = q.dh1;
    r.base1 = q.base2;
    r.base2 = q.base1;
    return r;
}

DataQuadruple act_G3(const DataQuadruple& q) {
    DataQuadruple r = q;
    r.nu2 = -q.nu2;
    r.dh2 = -q.dh2;
    return r;
}

namespace {

bool class_equal(const CmcClass& a, const CmcClass& b) {
    if (a.family != b.family) return false;
    switch (a.family) {
        case CmcClass::Family::Cylinder: return std::abs(a.k) == std::abs(b.k);
        case CmcClass::Family::Slice: return true;
        case CmcClass::Family::Arl:
            return in_GX(compose(b.precompose, inverse(a.precompose)));
        case CmcClass::Family::Helicoid:
            return in_GY(compose(b.precompose, inverse(a.precompose)));
    }
    return false;
}

bool quad_equal(const DataQuadruple& a, const DataQuadruple& b) {
    return a.nu1 == b.nu1 && a.dh1 == b.dh1 && a.nu2 == b.nu2 && a.dh2 == b.dh2 &&
           class_equal(a.base1, b.base1) && class_equal(a.base2, b.base2);
}

DataQuadruple flip1(const DataQuadruple& q) {
    DataQuadruple r = q;
    r.nu1 = -q.nu1;
    r.dh1 = -q.dh1;
    return r;
}

} // namespace

bool unordered_equal(const DataQuadruple& a, const DataQuadruple& b) {
    // orbit of the group generated by the slot swap and per-slot sign flips
    for (int swap = 0; swap < 2; ++swap)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
                DataQuadruple q = swap ? act_G2(a) : a;
                if (s1) q = flip1(q);
                if (s2) q = act_G3(q);
                if (quad_equal(q, b)) return true;
            }
    return false;
}

} // namespace cmclab
