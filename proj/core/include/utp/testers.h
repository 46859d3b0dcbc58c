// Copyright 2026 The utp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UTP_TESTERS_H
#define UTP_TESTERS_H

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "utp/distribution.h"
#include "utp/linalg.h"
#include "utp/operators.h"

namespace utp {

/// Looser tolerance for invariants that accumulate error over many terms
/// (POVM completeness, MES reshaped unitarity).
inline constexpr double kSumTol = 1e-8;

class PureState {
   public:
    explicit PureState(ComplexVector amplitudes, double tol = kDefaultTol);

    size_t dim() const {
        return amplitudes_.dim();
    }
    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }

   private:
    ComplexVector amplitudes_;
};

/// Rank-one projective measurement {|chi_i><chi_i|} from an orthonormal basis.
class ProjectiveMeasurement {
   public:
    explicit ProjectiveMeasurement(std::vector<PureState> basis, double tol = kDefaultTol);

    static ProjectiveMeasurement computational(size_t d);
    /// Columns of a unitary as the basis.
    static ProjectiveMeasurement from_unitary(const UnitaryOperator &u);

    size_t dim() const {
        return basis_.size();
    }
    std::span<const PureState> basis() const {
        return basis_;
    }
    const ComplexVector &vector(size_t i) const {
        return basis_[i].amplitudes();
    }
    /// Matrix whose columns are the basis vectors.
    ComplexMatrix as_matrix() const;

   private:
    std::vector<PureState> basis_;
};

class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix matrix, double tol = kDefaultTol);
    static DensityMatrix from_pure(const PureState &psi);

    size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

   private:
    ComplexMatrix matrix_;
};

class Povm {
   public:
    /// Each element must be Hermitian PSD within tol; the elements must sum
    /// to the identity within sum_tol.
    explicit Povm(std::vector<ComplexMatrix> elements, double tol = kDefaultTol, double sum_tol = kSumTol);
    static Povm from_projective(const ProjectiveMeasurement &m);

    size_t dim() const {
        return elements_.front().rows();
    }
    size_t size() const {
        return elements_.size();
    }
    std::span<const ComplexMatrix> elements() const {
        return elements_;
    }

   private:
    std::vector<ComplexMatrix> elements_;
};

/// Projective measurement onto d^2 maximally entangled states of C^d (x) C^d.
/// Element |nu_i> reshaped row-major into a d x d matrix equals N_i / sqrt(d)
/// with N_i unitary, i.e. |nu_i> = (N_i (x) I)|Phi>.
class MesMeasurement {
   public:
    MesMeasurement(size_t local_dim, std::vector<PureState> basis, double tol = kDefaultTol, double unitary_tol = kSumTol);

    size_t local_dim() const {
        return local_dim_;
    }
    std::span<const PureState> basis() const {
        return basis_;
    }
    const ComplexVector &vector(size_t i) const {
        return basis_[i].amplitudes();
    }
    /// The unitary N_i with |nu_i> = (N_i (x) I)|Phi>.
    ComplexMatrix local_unitary(size_t i) const;

   private:
    size_t local_dim_;
    std::vector<PureState> basis_;
};

enum class TesterKind { Projective, Mes, Povm };

std::string_view kind_name(TesterKind kind);

struct ProjectiveTester {
    PureState input;
    ProjectiveMeasurement measurement;
};

/// Input is always the canonical MES of dimension local_dim^2.
struct MesTester {
    MesMeasurement measurement;
};

struct PovmTester {
    DensityMatrix input;
    Povm measurement;
};

/// A pair (input state, measurement) used to probe an unknown unitary.
class Tester {
   public:
    /// Throws std::invalid_argument if input and measurement dimensions differ.
    Tester(ProjectiveTester t);
    Tester(MesTester t);
    Tester(PovmTester t);

    TesterKind kind() const;
    /// Dimension of the system the tested unitary acts on.
    size_t dim() const;

    const ProjectiveTester &projective() const {
        return std::get<ProjectiveTester>(value_);
    }
    const MesTester &mes() const {
        return std::get<MesTester>(value_);
    }
    const PovmTester &povm() const {
        return std::get<PovmTester>(value_);
    }
    const auto &variant() const {
        return value_;
    }

   private:
    std::variant<ProjectiveTester, MesTester, PovmTester> value_;
};

/// Outcome probabilities when the tester probes u:
///   projective  |<chi_i|U|psi>|^2
///   mes         |<nu_i|(U (x) I)|Phi>|^2
///   povm        Tr[M_k U rho U^dagger]
OutcomeDistribution outcome_distribution(const Tester &t, const UnitaryOperator &u);

/// (1/sqrt(d)) sum_i |ii>.
PureState mes_state(size_t d);

/// {(X^a Z^b (x) I)|Phi>}, element index a*d + b, with X the cyclic shift
/// and Z = diag(e^{2 pi i j/d}).
MesMeasurement bell_basis(size_t d);

/// Reduced density matrix of one factor of a bipartite pure state on
/// C^d (x) C^d. subsystem is 0 (first factor) or 1 (second).
ComplexMatrix reduced_state(const PureState &psi, size_t local_dim, int subsystem);

/// Re-expresses a tester whose input is the MES (C (x) I)|Phi> as a tester on
/// the canonical |Phi>: the returned measurement is {(I (x) conj(C))|nu_i>}.
MesMeasurement absorb_mes_input(const MesMeasurement &m, const UnitaryOperator &c);

/// Projective tester measuring in an eigenbasis of W V^dagger, with input
/// V^dagger|chi_1>; both outcomes are then deterministic.
Tester trivial_tester(const UnitaryOperator &v, const UnitaryOperator &w);

/// True iff every basis vector is an eigenvector of W V^dagger within tol.
bool is_trivial_measurement(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, double tol = kDefaultTol);

}  // namespace utp

#endif
