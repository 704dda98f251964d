// Copyright 2026 The gflowc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>

#include "gflowc/circuit.hpp"
#include "gflowc/graph.hpp"
#include "gflowc/pattern.hpp"

namespace gflowc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/**
 * A complex matrix with explicit qubit labels per row-index bit and per
 * column-index bit. Label 0 owns the most significant bit. Maps need not be
 * square or norm-preserving.
 */
struct DenseMap {
    Matrix mat;
    std::vector<int> row_wires;
    std::vector<int> col_wires;

    /// Permutes row qubits into the given label order.
    DenseMap with_row_order(const std::vector<int>& order) const;
    DenseMap with_col_order(const std::vector<int>& order) const;
};

Eigen::Matrix2cd j_matrix(double alpha);
Eigen::Matrix2cd h_matrix();
Eigen::Matrix2cd pauli(char p);  // 'I', 'X', 'Y', 'Z'
Eigen::Matrix4cd cz_matrix();
Eigen::Matrix4cd cx_matrix();  // control = first (most significant) qubit
/// Measurement bra <+_alpha| = (<0| + e^{-i alpha} <1|)/sqrt(2).
Eigen::RowVector2cd plus_bra(double alpha = 0.0);
Eigen::Vector2cd plus_ket();

/**
 * A batch of state vectors over a dynamic, labeled qubit set. Qubits attach
 * and contract as the computation walks a gate list, which keeps post-
 * selected evaluations inside a small register even when many ancillas
 * appear over the circuit's lifetime.
 */
class QubitRegister {
  public:
    /// Register holding `batch` columns over no qubits (scalar rows).
    explicit QubitRegister(Eigen::Index batch = 1);
    /// Identity batch: one column per basis state of the given labels.
    static QubitRegister identity_batch(const std::vector<int>& labels);
    /// Register wrapping an existing amplitude matrix (2^|labels| rows).
    static QubitRegister with_state(Matrix amplitudes, const std::vector<int>& labels);

    std::size_t qubit_count() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const Matrix& amplitudes() const { return amp_; }

    void attach(int label, const Eigen::Vector2cd& state);
    void contract(int label, const Eigen::RowVector2cd& bra);
    void apply_1q(int label, const Eigen::Matrix2cd& u);
    void apply_cz(int a, int b);
    void apply_cx(int control, int target);
    /// Applies a gate on wire labels (J/CZ/CX only).
    void apply(const Gate& g);

    /// Rows reordered so the labels appear in the given order.
    Matrix matrix_with_rows(const std::vector<int>& order) const;

  private:
    int pos_of(int label) const;

    Matrix amp_;               // 2^q x batch
    std::vector<int> labels_;  // labels_[0] = most significant bit
};

/// Sorted non-output vertex ids of a pattern's graph.
std::vector<int> measured_ids(const MeasurementPattern& p);

/**
 * Graph state |G>_phi: |+> on non-inputs, the given input state on I
 * (row labels = input ids ascending), then CZ per edge. Output rows are
 * labeled by all vertex ids ascending.
 */
DenseMap build_graph_state(const OpenGraph& g, const DenseMap& input_state);

/**
 * The linear map implemented by deterministic measurement of the pattern:
 * every non-output contracted against <+_alpha|, outputs kept. Rows are the
 * output ids ascending, columns the input ids ascending; the all-plus branch
 * is returned unnormalized.
 */
DenseMap pattern_map(const MeasurementPattern& p);

/// Ordered product of the circuit's gates; throws on acausal gates.
DenseMap circuit_unitary(const Circuit& c);

struct PostselectedResult {
    DenseMap map;        // kept-branch map on the main wires (unnormalized)
    double probability;  // branch probability for a maximally mixed input
    bool zero_branch;    // the kept branch is (numerically) impossible
};

/// Contracts preparations and post-selections of a post-selected circuit,
/// attaching each ancilla at first use and contracting it after its last.
PostselectedResult postselected_map(const PostselectedCircuit& c);

/**
 * A Pauli string (letters by qubit label, with sign), optionally promoted to
 * its controlled version by naming a control label.
 */
struct PauliLikeOp {
    std::map<int, char> letters;  // label -> 'X' | 'Y' | 'Z'
    Complex sign = 1.0;
    std::optional<int> control;
};

/// True iff op * state == state entrywise to 1e-12.
bool stabilizer_check(const DenseMap& state, const PauliLikeOp& op);

struct PhaseScale {
    double phase;
    double scale;
};

/**
 * Finds (theta, s > 0) with max|a - s e^{i theta} b| < tol, anchored on b's
 * largest-magnitude entry. Returns nullopt if no such pair exists.
 */
std::optional<PhaseScale> equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace gflowc
