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

#include "gflowc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gflowc {

namespace {
constexpr Complex kI{0.0, 1.0};

std::vector<int> bit_positions(const std::vector<int>& labels, const std::vector<int>& order) {
    if (order.size() != labels.size())
        throw std::invalid_argument("label order has wrong length");
    std::vector<int> pos;
    pos.reserve(order.size());
    for (int l : order) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw std::invalid_argument("unknown qubit label");
        pos.push_back(static_cast<int>(it - labels.begin()));
    }
    return pos;
}

Matrix permute_axis(const Matrix& m, const std::vector<int>& pos, bool rows) {
    std::size_t q = pos.size();
    Eigen::Index dim = Eigen::Index{1} << q;
    if ((rows ? m.rows() : m.cols()) != dim)
        throw std::invalid_argument("dimension does not match qubit count");
    Matrix out(m.rows(), m.cols());
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        Eigen::Index src = 0;
        for (std::size_t k = 0; k < q; ++k) {
            Eigen::Index bit = (idx >> (q - 1 - k)) & 1;
            src |= bit << (q - 1 - static_cast<std::size_t>(pos[k]));
        }
        if (rows)
            out.row(idx) = m.row(src);
        else
            out.col(idx) = m.col(src);
    }
    return out;
}
}  // namespace

DenseMap DenseMap::with_row_order(const std::vector<int>& order) const {
    DenseMap out;
    out.mat = permute_axis(mat, bit_positions(row_wires, order), true);
    out.row_wires = order;
    out.col_wires = col_wires;
    return out;
}

DenseMap DenseMap::with_col_order(const std::vector<int>& order) const {
    DenseMap out;
    out.mat = permute_axis(mat, bit_positions(col_wires, order), false);
    out.row_wires = row_wires;
    out.col_wires = order;
    return out;
}

Eigen::Matrix2cd j_matrix(double alpha) {
    Eigen::Matrix2cd m;
    Complex e = std::exp(-kI * alpha);
    m << 1.0, e, 1.0, -e;
    return m / std::sqrt(2.0);
}

Eigen::Matrix2cd h_matrix() { return j_matrix(0.0); }

Eigen::Matrix2cd pauli(char p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -kI, kI, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("unknown Pauli letter");
    }
    return m;
}

Eigen::Matrix4cd cz_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(3, 3) = -1.0;
    return m;
}

Eigen::Matrix4cd cx_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = m(1, 1) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
}

Eigen::RowVector2cd plus_bra(double alpha) {
    Eigen::RowVector2cd b;
    b << 1.0, std::exp(-kI * alpha);
    return b / std::sqrt(2.0);
}

Eigen::Vector2cd plus_ket() {
    Eigen::Vector2cd k;
    k << 1.0, 1.0;
    return k / std::sqrt(2.0);
}

QubitRegister::QubitRegister(Eigen::Index batch) { amp_ = Matrix::Ones(1, batch); }

QubitRegister QubitRegister::identity_batch(const std::vector<int>& labels) {
    QubitRegister r;
    Eigen::Index dim = Eigen::Index{1} << labels.size();
    r.amp_ = Matrix::Identity(dim, dim);
    r.labels_ = labels;
    return r;
}

QubitRegister QubitRegister::with_state(Matrix amplitudes, const std::vector<int>& labels) {
    if (amplitudes.rows() != (Eigen::Index{1} << labels.size()))
        throw std::invalid_argument("amplitude rows must be 2^#labels");
    QubitRegister r;
    r.amp_ = std::move(amplitudes);
    r.labels_ = labels;
    return r;
}

int QubitRegister::pos_of(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown qubit label");
    return static_cast<int>(it - labels_.begin());
}

void QubitRegister::attach(int label, const Eigen::Vector2cd& state) {
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
        throw std::invalid_argument("label already attached");
    // New qubit becomes the least significant bit.
    Matrix next(amp_.rows() * 2, amp_.cols());
    for (Eigen::Index i = 0; i < amp_.rows(); ++i) {
        next.row(2 * i) = amp_.row(i) * state(0);
        next.row(2 * i + 1) = amp_.row(i) * state(1);
    }
    amp_ = std::move(next);
    labels_.push_back(label);
}

void QubitRegister::contract(int label, const Eigen::RowVector2cd& bra) {
    int p = pos_of(label);
    std::size_t q = labels_.size();
    Eigen::Index stride = Eigen::Index{1} << (q - 1 - static_cast<std::size_t>(p));
    Matrix next(amp_.rows() / 2, amp_.cols());
    Eigen::Index out = 0;
    for (Eigen::Index base = 0; base < amp_.rows(); ++base) {
        if ((base / stride) % 2 != 0) continue;
        next.row(out++) = bra(0) * amp_.row(base) + bra(1) * amp_.row(base + stride);
    }
    amp_ = std::move(next);
    labels_.erase(labels_.begin() + p);
}

void QubitRegister::apply_1q(int label, const Eigen::Matrix2cd& u) {
    int p = pos_of(label);
    std::size_t q = labels_.size();
    Eigen::Index stride = Eigen::Index{1} << (q - 1 - static_cast<std::size_t>(p));
    for (Eigen::Index base = 0; base < amp_.rows(); ++base) {
        if ((base / stride) % 2 != 0) continue;
        Eigen::RowVectorXcd a0 = amp_.row(base);
        Eigen::RowVectorXcd a1 = amp_.row(base + stride);
        amp_.row(base) = u(0, 0) * a0 + u(0, 1) * a1;
        amp_.row(base + stride) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void QubitRegister::apply_cz(int a, int b) {
    Eigen::Index sa = Eigen::Index{1} << (labels_.size() - 1 - static_cast<std::size_t>(pos_of(a)));
    Eigen::Index sb = Eigen::Index{1} << (labels_.size() - 1 - static_cast<std::size_t>(pos_of(b)));
    for (Eigen::Index i = 0; i < amp_.rows(); ++i)
        if (((i / sa) % 2) && ((i / sb) % 2)) amp_.row(i) = -amp_.row(i);
}

void QubitRegister::apply_cx(int control, int target) {
    Eigen::Index sc =
        Eigen::Index{1} << (labels_.size() - 1 - static_cast<std::size_t>(pos_of(control)));
    Eigen::Index st =
        Eigen::Index{1} << (labels_.size() - 1 - static_cast<std::size_t>(pos_of(target)));
    for (Eigen::Index i = 0; i < amp_.rows(); ++i)
        if (((i / sc) % 2) && ((i / st) % 2) == 0) amp_.row(i).swap(amp_.row(i + st));
}

void QubitRegister::apply(const Gate& g) {
    switch (g.kind) {
        case GateKind::J: apply_1q(g.wire, j_matrix(g.angle)); break;
        case GateKind::CZ: apply_cz(g.wire_a, g.wire_b); break;
        case GateKind::CX: apply_cx(g.wire_a, g.wire_b); break;
        default: throw std::invalid_argument("acausal gate has no direct action");
    }
}

Matrix QubitRegister::matrix_with_rows(const std::vector<int>& order) const {
    return permute_axis(amp_, bit_positions(labels_, order), true);
}

std::vector<int> measured_ids(const MeasurementPattern& p) {
    std::vector<int> out;
    for (int v : p.graph.non_outputs().members()) out.push_back(p.graph.id_of(v));
    return out;
}

DenseMap build_graph_state(const OpenGraph& g, const DenseMap& input_state) {
    std::vector<int> in = g.inputs().members();
    Eigen::Index in_dim = Eigen::Index{1} << in.size();
    if (input_state.mat.rows() != in_dim)
        throw std::invalid_argument("input state dimension must be 2^|I|");

    std::size_t n = g.size();
    Eigen::Index dim = Eigen::Index{1} << n;
    double plus_amp = std::pow(std::sqrt(0.5), static_cast<double>(n - in.size()));
    Matrix amp = Matrix::Zero(dim, input_state.mat.cols());
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        Eigen::Index in_idx = 0;
        for (std::size_t k = 0; k < in.size(); ++k) {
            Eigen::Index bit = (idx >> (n - 1 - static_cast<std::size_t>(in[k]))) & 1;
            in_idx |= bit << (in.size() - 1 - k);
        }
        amp.row(idx) = plus_amp * input_state.mat.row(in_idx);
    }
    // CZ along every edge.
    for (auto [u, v] : g.edges()) {
        Eigen::Index su = Eigen::Index{1} << (n - 1 - static_cast<std::size_t>(u));
        Eigen::Index sv = Eigen::Index{1} << (n - 1 - static_cast<std::size_t>(v));
        for (Eigen::Index i = 0; i < dim; ++i)
            if (((i / su) % 2) && ((i / sv) % 2)) amp.row(i) = -amp.row(i);
    }
    DenseMap out;
    out.mat = std::move(amp);
    for (int v : g.ids()) out.row_wires.push_back(v);
    out.col_wires = input_state.col_wires;
    return out;
}

DenseMap pattern_map(const MeasurementPattern& p) {
    const OpenGraph& g = p.graph;
    std::vector<int> in = g.inputs().members();
    Eigen::Index in_dim = Eigen::Index{1} << in.size();

    DenseMap input;
    input.mat = Matrix::Identity(in_dim, in_dim);
    for (int v : in) input.col_wires.push_back(g.id_of(v));
    input.row_wires = input.col_wires;

    DenseMap state = build_graph_state(g, input);

    // Contract <+_alpha| on every measured vertex, highest index first so
    // the remaining label positions stay valid.
    Matrix amp = state.mat;
    std::vector<int> labels;
    for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(static_cast<int>(i));
    std::vector<int> measured = g.non_outputs().members();
    for (auto it = measured.rbegin(); it != measured.rend(); ++it) {
        int v = *it;
        auto lit = std::find(labels.begin(), labels.end(), v);
        std::size_t pos = static_cast<std::size_t>(lit - labels.begin());
        std::size_t q = labels.size();
        Eigen::Index stride = Eigen::Index{1} << (q - 1 - pos);
        Eigen::RowVector2cd bra = plus_bra(p.angle_of(v));
        Matrix next(amp.rows() / 2, amp.cols());
        Eigen::Index out_row = 0;
        for (Eigen::Index base = 0; base < amp.rows(); ++base) {
            if ((base / stride) % 2 != 0) continue;
            next.row(out_row++) = bra(0) * amp.row(base) + bra(1) * amp.row(base + stride);
        }
        amp = std::move(next);
        labels.erase(lit);
    }

    DenseMap out;
    out.mat = std::move(amp);
    for (int v : labels) out.row_wires.push_back(g.id_of(v));
    out.col_wires = input.col_wires;
    return out;
}

DenseMap circuit_unitary(const Circuit& c) {
    for (const auto& g : c.gates)
        if (g.kind == GateKind::ACCZ || g.kind == GateKind::ACCX)
            throw std::invalid_argument(
                "circuit contains acausal gates; expand and use postselected_map");
    std::vector<int> wires;
    for (std::size_t w = 0; w < c.wire_count(); ++w) wires.push_back(static_cast<int>(w));
    QubitRegister reg = QubitRegister::identity_batch(wires);
    for (const auto& g : c.gates) reg.apply(g);
    DenseMap out;
    out.mat = reg.matrix_with_rows(wires);
    out.row_wires = wires;
    out.col_wires = wires;
    return out;
}

PostselectedResult postselected_map(const PostselectedCircuit& c) {
    for (int w : c.prep_plus)
        if (w < c.main_wires || w >= c.total_wires)
            throw std::invalid_argument("preparation on a non-ancilla wire");
    if (c.prep_plus.size() != c.postselect_plus.size())
        throw std::invalid_argument("each ancilla needs one preparation and one post-selection");

    // First/last gate touching each ancilla.
    std::map<int, std::pair<std::size_t, std::size_t>> span;
    auto touch = [&](int w, std::size_t i) {
        if (w < c.main_wires) return;
        auto it = span.find(w);
        if (it == span.end())
            span[w] = {i, i};
        else
            it->second.second = i;
    };
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::J)
            touch(g.wire, i);
        else {
            touch(g.wire_a, i);
            touch(g.wire_b, i);
        }
    }
    for (int w : c.prep_plus)
        if (!span.count(w)) span[w] = {0, 0};  // untouched ancilla: <+|+> = 1

    std::vector<int> mains;
    for (int w = 0; w < c.main_wires; ++w) mains.push_back(w);
    QubitRegister reg = QubitRegister::identity_batch(mains);

    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        for (auto& [w, sp] : span)
            if (sp.first == i) reg.attach(w, plus_ket());
        reg.apply(c.gates[i]);
        for (auto& [w, sp] : span)
            if (sp.second == i) reg.contract(w, plus_bra());
    }

    PostselectedResult res;
    res.map.mat = reg.matrix_with_rows(mains);
    res.map.row_wires = mains;
    res.map.col_wires = mains;
    double norm2 = res.map.mat.squaredNorm();
    res.probability = norm2 / static_cast<double>(Eigen::Index{1} << c.main_wires);
    res.zero_branch = norm2 < 1e-24;
    return res;
}

bool stabilizer_check(const DenseMap& state, const PauliLikeOp& op) {
    for (auto& [label, p] : op.letters) {
        if (std::find(state.row_wires.begin(), state.row_wires.end(), label) ==
            state.row_wires.end())
            throw std::invalid_argument("operator acts on a qubit absent from the state");
        if (p != 'X' && p != 'Y' && p != 'Z' && p != 'I')
            throw std::invalid_argument("unknown Pauli letter");
    }
    if (op.control && op.letters.count(*op.control))
        throw std::invalid_argument("control qubit overlaps the operator body");

    std::size_t q = state.row_wires.size();
    Eigen::Index dim = Eigen::Index{1} << q;
    if (state.mat.rows() != dim) throw std::invalid_argument("state dimension mismatch");

    Matrix transformed = state.mat;
    auto stride_of = [&](int label) {
        auto it = std::find(state.row_wires.begin(), state.row_wires.end(), label);
        std::size_t pos = static_cast<std::size_t>(it - state.row_wires.begin());
        return Eigen::Index{1} << (q - 1 - pos);
    };
    // Apply the Pauli string (controlled if requested).
    Eigen::Index cs = op.control ? stride_of(*op.control) : 0;
    Matrix result = Matrix::Zero(dim, state.mat.cols());
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        if (op.control && ((idx / cs) % 2) == 0) {
            result.row(idx) += transformed.row(idx);
            continue;
        }
        // X/Y flip bits; Z/Y add phases.
        Eigen::Index src = idx;
        Complex coeff = op.sign;
        for (auto& [label, p] : op.letters) {
            Eigen::Index s = stride_of(label);
            bool bit = (idx / s) % 2;
            switch (p) {
                case 'X': src ^= s; break;
                case 'Y':
                    src ^= s;
                    coeff *= bit ? kI : -kI;
                    break;
                case 'Z':
                    if (bit) coeff = -coeff;
                    break;
                default: break;
            }
        }
        result.row(idx) += coeff * transformed.row(src);
    }
    return max_abs_diff(result, state.mat) < 1e-12;
}

std::optional<PhaseScale> equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch");
    Eigen::Index r = 0, c = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(b(i, j)) > best) best = std::abs(b(i, j)), r = i, c = j;
    if (best <= 0.0) {
        if (a.cwiseAbs().maxCoeff() < tol) return PhaseScale{0.0, 1.0};
        return std::nullopt;
    }
    Complex ratio = a(r, c) / b(r, c);
    double scale = std::abs(ratio);
    if (scale <= 0.0) return std::nullopt;
    double phase = std::arg(ratio);
    Matrix scaled = std::polar(scale, phase) * b;
    if (max_abs_diff(a, scaled) < tol) return PhaseScale{phase, scale};
    return std::nullopt;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace gflowc
