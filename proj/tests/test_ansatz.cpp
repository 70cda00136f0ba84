#include <doctest.h>

#include <cmath>

#include "matrix_oracle.hpp"
#include "qkge/ansatz.hpp"
#include "qkge/rng.hpp"
#include "qkge/statevector.hpp"

using namespace qkge;

namespace {

ParamVector random_params(const AnsatzSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    ParamVector v(static_cast<std::size_t>(param_count(spec)));
    for (double& x : v) x = rng.next_angle();
    return v;
}

} // namespace

TEST_CASE("parameter count formula") {
    CHECK(param_count({3, 2}) == 12);
    CHECK(param_count({1, 1}) == 2);
    CHECK_THROWS_AS(param_count({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(param_count({2, 0}), std::invalid_argument);
}

TEST_CASE("circuit builders accept exactly param_count angles") {
    const AnsatzSpec spec{2, 2};
    const ParamVector good(8, 0.0);
    CHECK_NOTHROW(entity_state_circuit(spec, good));
    CHECK_NOTHROW(relation_unitary_circuit(spec, good));
    const ParamVector bad(7, 0.0);
    CHECK_THROWS_AS(entity_state_circuit(spec, bad), std::invalid_argument);
    CHECK_THROWS_AS(relation_unitary_circuit(spec, bad), std::invalid_argument);
}

TEST_CASE("zero-angle entity circuit on one qubit is |+> up to phase") {
    const AnsatzSpec spec{1, 1};
    const Statevector s = run_circuit(entity_state_circuit(spec, ParamVector(2, 0.0)));
    CHECK(probability_of(s, "0") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(probability_of(s, "1") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zero-angle relation circuit reduces to the CNOT skeleton") {
    const AnsatzSpec spec{3, 2};
    const Circuit relation = relation_unitary_circuit(spec, ParamVector(12, 0.0));

    Circuit skeleton(3);
    for (int layer = 0; layer < 2; ++layer) {
        for (int q = 0; q < 3; ++q) skeleton.add(Gate::cnot(q, (q + 1) % 3));
    }

    const Statevector in = oracle::random_state(3, 21);
    const Statevector via_relation = apply_circuit(in, relation);
    const Statevector via_skeleton = apply_circuit(in, skeleton);
    for (std::uint64_t i = 0; i < in.dimension(); ++i) {
        CHECK(std::norm(via_relation.amplitudes[i]) ==
              doctest::Approx(std::norm(via_skeleton.amplitudes[i])).epsilon(1e-10));
    }
}

TEST_CASE("prepared entity states are normalized and generally distinct") {
    for (int n = 1; n <= 3; ++n) {
        const AnsatzSpec spec{n, 2};
        const Statevector a = run_circuit(entity_state_circuit(spec, random_params(spec, 1)));
        const Statevector b = run_circuit(entity_state_circuit(spec, random_params(spec, 2)));
        CHECK(std::abs(a.norm() - 1.0) < 1e-10);
        CHECK(std::abs(b.norm() - 1.0) < 1e-10);
        CHECK(std::norm(inner_product(a, b)) < 1.0 - 1e-6);
    }
}

TEST_CASE("relation unitary times its adjoint is the identity") {
    for (int n = 1; n <= 3; ++n) {
        const AnsatzSpec spec{n, 2};
        const Circuit u = relation_unitary_circuit(spec, random_params(spec, 30 + n));
        const Statevector in = oracle::random_state(n, 60 + n);
        const Statevector round = apply_circuit(apply_circuit(in, u), adjoint(u));
        for (std::uint64_t i = 0; i < in.dimension(); ++i) {
            CHECK(std::abs(round.amplitudes[i] - in.amplitudes[i]) < 1e-10);
        }
    }
}

TEST_CASE("adjoint rules") {
    Circuit c(1);
    c.add(Gate::ry(0, 0.7));
    const Circuit adj = adjoint(c);
    CHECK(adj.gates[0].kind == GateKind::RY);
    CHECK(adj.gates[0].angle == doctest::Approx(-0.7));

    Circuit h(1);
    h.add(Gate::h(0));
    CHECK(adjoint(h) == h);
}

TEST_CASE("adjoint is an involution, gate for gate") {
    const Circuit c = oracle::random_circuit(3, 20, 99);
    CHECK(adjoint(adjoint(c)) == c);

    Circuit with_sub(3);
    Circuit body(2);
    body.add(Gate::ry(0, 0.4));
    body.add(Gate::cnot(0, 1));
    with_sub.add(Gate::controlled(body, 2));
    CHECK(adjoint(adjoint(with_sub)) == with_sub);
}

TEST_CASE("same spec and parameters always give the identical gate list") {
    const AnsatzSpec spec{3, 2};
    const ParamVector theta = random_params(spec, 5);
    CHECK(entity_state_circuit(spec, theta) == entity_state_circuit(spec, theta));
    CHECK(relation_unitary_circuit(spec, theta) == relation_unitary_circuit(spec, theta));
}

TEST_CASE("entity circuit depth stays within 4 * n * layers") {
    for (int n = 1; n <= 6; ++n) {
        for (int layers = 1; layers <= 3; ++layers) {
            const AnsatzSpec spec{n, layers};
            const Circuit c = entity_state_circuit(
                spec, ParamVector(static_cast<std::size_t>(param_count(spec)), 0.0));
            CHECK(c.depth() <= 4 * n * layers);
        }
    }
}
