#pragma once

#include <optional>
#include <string>

#include "cmclab/moebius.hpp"

namespace cmclab {

// Congruence-class descriptor of a CMC immersion of Omega (or of a cylinder
// slice factor). precompose is meaningful for the Omega families only.
struct CmcClass {
    enum class Family { Arl, Helicoid, Cylinder, Slice };

    Family family;
    double k = 0.0; // geodesic curvature, Cylinder only
    MoebiusElement precompose = MoebiusElement::identity();

    static CmcClass arl(MoebiusElement f = MoebiusElement::identity());
    static CmcClass helicoid(MoebiusElement f = MoebiusElement::identity());
    static CmcClass cylinder(double k);
    static CmcClass slice();
};

// Classification bucket of an unordered pair of CMC classes.
struct PmcBucket {
    enum class Kind {
        ProductOfCurves,
        CmcInSliceArl,
        CmcInSliceHelicoid,
        TorralboUrbano,
        A_Id,
        A_Zeta,
        B_Eta,
        B_M,
        B_EtaM
    };

    Kind kind;
    std::optional<Rational> s;             // B_M / B_EtaM parameter
    std::optional<double> mean_curvature;  // ProductOfCurves: sqrt(k1^2+k2^2)/2

    bool operator==(const PmcBucket& o) const;
    std::string to_string() const;
    // stabilizer of the corresponding pair, when the Proposition covers it
    std::optional<StabilizerDescriptor> stabilizer_descriptor() const;
};

// Buckets the unordered pair into the classification list. c = +1 admits
// only cylinder pairs; incompatible pairs throw UnreachableBucketError.
PmcBucket classify_pair(int c, const CmcClass& first, const CmcClass& second);

// Extrinsic normal curvature of the pair from the two angle functions.
double normal_curvature(double nu1, double nu2);

// Data 4-uple (nu_1, dh_1, nu_2, dh_2) up to the ambient isometry action:
// the signs are relative to the base classes' reference data.
struct DataQuadruple {
    int nu1 = 1, dh1 = 1, nu2 = 1, dh2 = 1; // each +1 or -1
    CmcClass base1, base2;
};

DataQuadruple act_G1(const DataQuadruple& q); // (-nu2,-dh2,-nu1,-dh1)
DataQuadruple act_G2(const DataQuadruple& q); // (nu2,dh2,nu1,dh1)
DataQuadruple act_G3(const DataQuadruple& q); // (nu1,dh1,-nu2,-dh2)

// True iff b lies in the orbit of a under G1, G2, G3 and the per-factor
// pi-rotation sign flips.
bool unordered_equal(const DataQuadruple& a, const DataQuadruple& b);

} // namespace cmclab
