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
#include <optional>

#include "gflowc/circuit.hpp"
#include "gflowc/pathcover.hpp"
#include "gflowc/pattern.hpp"

namespace gflowc {

/**
 * A circuit whose gate list may contain acausal CZ-gates, anchored to wire
 * positions rather than time slots. A two-qubit gate is temporally
 * consistent when its two positions admit a common time slice under the
 * J-gate schedule of the gate list.
 */
struct AcausalCircuit {
    Circuit circuit;
    std::vector<bool> consistent;     // aligned with circuit.gates
    std::optional<OpenGraph> graph;   // source open graph, when known
};

/// Recomputes the temporal-consistency flags from the gate list.
std::vector<bool> temporal_consistency(const Circuit& c);

/**
 * Star pattern transformation for gflow: wires and J-gates as for flow, with
 * every non-path edge becoming a CZ when its two positions share a time
 * slice under the layer-ordered J schedule, and an acausal CZ otherwise.
 */
AcausalCircuit spt_gflow(const MeasurementPattern& p);

/**
 * Replaces every acausal CZ by the three-CZ gadget over a fresh ancilla
 * pair, prepared in |+> and post-selected on <+|; each gadget leg lands at a
 * slot inside its anchor segment. Acausal CNOTs expand with the target leg
 * as a CNOT from the ancilla.
 */
PostselectedCircuit expand_acausal(const AcausalCircuit& c);

enum class AcausalIdentity { A, B, C, D };

struct IdentitySite {
    std::size_t gate = 0;             // primary gate index
    std::size_t other = SIZE_MAX;     // partner gate index (identity c)
};

struct RewriteReport {
    bool applied = false;
    std::string note;
};

/**
 * Applies one local identity at the given site:
 *   a: a temporally consistent acausal CZ becomes an ordinary CZ;
 *   b: an acausal CNOT slides backward through the J ending at its target
 *      segment and becomes an acausal CZ;
 *   c: an acausal CNOT slides backward past a (possibly acausal) CZ sharing
 *      its target position, spawning the CZ between its control and the
 *      other gate's far endpoint;
 *   d: a pair of acausal CZ-gates on one position pair cancels.
 * Pattern mismatches leave the circuit unchanged and report why.
 */
RewriteReport apply_acausal_identity(AcausalCircuit& c, AcausalIdentity which, IdentitySite site);

/**
 * Eliminates every acausal gate by inserting, per matched vertex, the
 * involutive conjugating CNOT pair and commuting one copy backward through
 * the identities until the cross-gate set matches the rewired graph; the
 * remaining gates are all temporally consistent and assemble into the
 * layer-block circuit. The result must agree with the graph-surgery
 * translation gate for gate.
 */
struct RewriteTrace {
    // Cross-gate id pairs after each conjugation step of the first layer,
    // sorted; comparable against the graph sequence's rewired graphs.
    std::vector<std::vector<std::pair<int, int>>> step_cross_edges;
};

Circuit rewrite_acausal_to_ordinary(const AcausalCircuit& c, const MatchingGflow& mg,
                                    RewriteTrace* trace = nullptr);

/// Cross-gate position pairs (as vertex-id pairs) currently in an acausal
/// circuit, sorted; used to compare rewrite states against graph surgery.
std::vector<std::pair<int, int>> cross_edge_ids(const AcausalCircuit& c);

enum class TeleportPolicy { Postselect, PauliCorrect };

struct TeleportBranch {
    int s_a;  // +1 or -1
    int s_b;
    Eigen::Matrix2cd map;  // branch map after the policy's correction and U'
};

struct TeleportEvaluation {
    std::vector<TeleportBranch> branches;
};

/**
 * Gate teleportation of U followed by U': prepares CZ|++> on (B, C), applies
 * U on A, Bell-measures (A, B) in the basis {CZ|s_A s_B>}, and finishes with
 * U' on C. With post-selection only the (+,+) branch is kept, carrying the
 * scalar 1/2; with Pauli corrections every branch map equals U'U up to a
 * phase. Inputs must be unitary.
 */
TeleportEvaluation teleport_expand(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& uprime,
                                   TeleportPolicy policy);

/// The same branch evaluated with U' applied before the Bell measurement and
/// the conjugated correction U' P U'^{-1} afterwards.
Eigen::Matrix2cd teleport_branch_postponed(const Eigen::Matrix2cd& u,
                                           const Eigen::Matrix2cd& uprime, int s_a, int s_b);

/// Probability of outcome described by `basis_bra` when C is measured in an
/// arbitrary basis before the input state enters the gadget (U = U' = id),
/// in the kept teleportation branch.
double sent_back_probability(const Eigen::Vector2cd& phi, const Eigen::RowVector2cd& basis_bra);

}  // namespace gflowc
