#pragma once

#include "mvl/gate.hpp"
#include "mvl/limits.hpp"
#include "mvl/rational.hpp"
#include "mvl/sign_vector.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvl {

// Linear projections pi(y) = w . y. Each functional is stored with its first nonzero entry
// positive; zero functionals and duplicates up to sign are rejected.
class ProjectionFamily {
public:
    explicit ProjectionFamily(std::vector<RationalVector> functionals);

    // {-1, 0, 1}^m up to sign, in ZS_m enumeration order.
    static ProjectionFamily sign_family(std::size_t m, const Limits& limits = default_limits());

    const std::vector<RationalVector>& functionals() const noexcept { return functionals_; }
    std::size_t size() const noexcept { return functionals_.size(); }
    std::size_t dimension() const noexcept { return functionals_.front().size(); }

private:
    std::vector<RationalVector> functionals_;
};

// The exact integer 3^N - 2|ZE(ZS_N - S)| together with its base-3 logarithm.
struct CsValue {
    Integer value;

    double log3() const;
    // Twelve decimal digits; exact powers of three render exactly.
    std::string log3_text() const;
    friend auto operator<=>(const CsValue&, const CsValue&) = default;
};

struct Witness {
    RationalVector functional;
    TotalSignVector total_sign;
};

struct Certificate {
    BasePoint base_point;
    std::vector<Witness> witnesses;
};

struct SensitivityReport {
    BasePoint base_point;
    std::vector<Witness> witness_signs;  // only functionals whose total sign eliminates something
    std::size_t functionals_evaluated = 0;
    SignSet sens_lower;                  // a subset of Sens_C(f) for C = C(phi, z)
    CsValue cs_lower;
    std::optional<CsValue> cs_upper;
};

struct GateSensitivity {
    std::size_t n = 0;
    std::vector<SensitivityReport> reports;  // one per base point, in base-point order
    CsValue cs_lower;                        // max over base points
    BasePoint argmax;
};

// sign_C of a scalar form over C = product of the simplices with nonzero base coordinate.
// `base` gives the base index of each of the form's blocks.
Sign sign_over_region(const MultilinearExpansion& form, const BasePoint& base);

// Sign_C(w . f) at base point z; entries ordered by block, then by coordinate skipping j(z, i).
TotalSignVector total_sign(const MultilinearExpansion& e, const BasePoint& z, std::span<const Rational> w);

// ZE of the total signs realized by the family: a certified subset of Sens_C(f).
SignSet sens_lower(const MultilinearExpansion& e, const BasePoint& z, const ProjectionFamily& family,
                   const Limits& limits = default_limits());

CsValue cs_at(std::size_t n, const SignSet& sens_subset, const Limits& limits = default_limits());
CsValue cs_at(const MultilinearExpansion& e, const SignSet& sens_subset, const Limits& limits = default_limits());

SensitivityReport analyze_base_point(const MultilinearExpansion& e, const BasePoint& z, const ProjectionFamily& family,
                                     const Limits& limits = default_limits());

GateSensitivity cs_gate(const MultilinearExpansion& e, const ProjectionFamily& family,
                        const Limits& limits = default_limits());

// A base point whose realized total signs eliminate all of ZS_N, with a greedily minimized
// witness subfamily. nullopt does not prove the gate is irreversible.
std::optional<Certificate> reversibility_certificate(const MultilinearExpansion& e, const ProjectionFamily& family,
                                                     const Limits& limits = default_limits());

// Replays total_sign for every witness and checks that their ZE is all of ZS_N.
bool verify_certificate(const MultilinearExpansion& e, const Certificate& certificate,
                        const Limits& limits = default_limits());

struct BooleanSensitivity {
    std::vector<std::size_t> per_point;                   // s(phi, z), base-point order
    std::vector<std::vector<std::size_t>> stable_inputs;  // D_z: inputs whose flip keeps the output
    std::size_t max = 0;                                  // s(phi)
};

// Requires every arity to be 2 and at most two distinct output values.
BooleanSensitivity boolean_sensitivity(const Gate& gate);

struct ExperimentRecord {
    BarycentricPoint point;
    RationalVector output;
};

struct RejectedRecord {
    std::size_t record;  // 0-based position in the input list
    std::string reason;
};

struct DataBound {
    std::optional<CsValue> bound;               // upper bound on cs(phi): max over base points
    std::vector<std::optional<CsValue>> per_point;
    bool heuristic = false;                     // collisions were judged with eps > 0
    std::size_t collisions = 0;
    std::vector<RejectedRecord> rejected;
};

// Upper bound on cs from observed collisions: for every base point z the sign classes of
// reduced-coordinate differences y - x of colliding interior records form Z_z, which is
// disjoint from Sens_C; hence cs(phi, z) <= log3(3^N - 2|ZE(Z_z)|).
DataBound data_upper_bound(std::span<const ExperimentRecord> records, const MultilinearExpansion& e,
                           const Rational& collision_tol, const Rational& interior_margin,
                           const Limits& limits = default_limits());

// Difference y - x in the reduced coordinates of base point z.
RationalVector reduced_difference(const BarycentricPoint& x, const BarycentricPoint& y, const BasePoint& z);

}  // namespace mvl
