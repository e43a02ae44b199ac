#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "edgeflow/dense.hpp"
#include "edgeflow/errors.hpp"
#include "edgeflow/kernels.hpp"
#include "edgeflow/sparse.hpp"
#include "test_support.hpp"

using namespace edgeflow;

TEST_CASE("from_triplets sums duplicates and sorts columns") {
    std::vector<Triplet> t{{1, 1, 2.0}, {0, 1, 1.0}, {0, 0, 3.0}, {0, 1, 0.5}};
    const SparseMatrix m = SparseMatrix::from_triplets(2, 2, std::move(t));
    CHECK(m.nonzeros() == 3);
    CHECK(m.at(0, 0) == 3.0);
    CHECK(m.at(0, 1) == 1.5);
    CHECK(m.at(1, 1) == 2.0);
    CHECK(m.at(1, 0) == 0.0);
}

TEST_CASE("from_triplets validates indices") {
    std::vector<Triplet> bad{{0, 5, 1.0}};
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, std::move(bad)), DimensionError);
    std::vector<Triplet> neg{{-1, 0, 1.0}};
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, std::move(neg)), DimensionError);
}

TEST_CASE("identity and linear_combination") {
    const SparseMatrix i3 = SparseMatrix::identity(3);
    std::vector<Triplet> t{{0, 1, 1.0}, {1, 0, 1.0}, {2, 2, 4.0}};
    const SparseMatrix a = SparseMatrix::from_triplets(3, 3, std::move(t));
    const std::vector<double> coef{2.0, 0.5};
    const std::vector<const SparseMatrix*> mats{&i3, &a};
    const SparseMatrix c = SparseMatrix::linear_combination(coef, mats);
    CHECK(c.at(0, 0) == 2.0);
    CHECK(c.at(0, 1) == 0.5);
    CHECK(c.at(2, 2) == 4.0);

    const SparseMatrix b = SparseMatrix::identity(2);
    const std::vector<const SparseMatrix*> mismatched{&i3, &b};
    CHECK_THROWS_AS(SparseMatrix::linear_combination(coef, mismatched), DimensionError);
}

TEST_CASE("linear_combination drops exact zeros from cancellation") {
    const SparseMatrix i2 = SparseMatrix::identity(2);
    const std::vector<double> coef{1.0, -1.0};
    const std::vector<const SparseMatrix*> mats{&i2, &i2};
    const SparseMatrix z = SparseMatrix::linear_combination(coef, mats);
    CHECK(z.nonzeros() == 0);
}

TEST_CASE("transpose round trip and symmetry check") {
    edgeflow::flowgen::Rng rng(31);
    const Graph g = testsup::random_connected_graph(rng, 4, 10);
    const SparseMatrix b = incidence_matrix(g);
    CHECK(b.transposed().transposed() == b);
    CHECK_FALSE(b.is_symmetric());
    CHECK(edge_laplacian(g).is_symmetric());
    CHECK(graph_laplacian(g).is_symmetric());
}

TEST_CASE("triplets come back sorted row major") {
    std::vector<Triplet> t{{1, 0, 5.0}, {0, 2, 1.0}, {0, 0, 2.0}};
    const SparseMatrix m = SparseMatrix::from_triplets(2, 3, std::move(t));
    const auto back = m.triplets();
    REQUIRE(back.size() == 3);
    CHECK(back[0].row == 0);
    CHECK(back[0].col == 0);
    CHECK(back[1].col == 2);
    CHECK(back[2].row == 1);
}

TEST_CASE("diagonal and frobenius norm") {
    std::vector<Triplet> t{{0, 0, 3.0}, {1, 1, -4.0}, {0, 1, 0.0}};
    const SparseMatrix m = SparseMatrix::from_triplets(2, 2, std::move(t));
    const auto d = m.diagonal();
    CHECK(d[0] == 3.0);
    CHECK(d[1] == -4.0);
    CHECK(m.frobenius_norm() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("parallel kernels agree with serial references") {
    edgeflow::flowgen::Rng rng(32);
    for (int t = 0; t < 10; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 5, 30, 2.0);
        const SparseMatrix l1 = edge_laplacian(g);
        const int e = g.num_edges();
        const std::vector<double> x = testsup::random_signal(rng, e);
        const std::vector<double> y = testsup::random_signal(rng, e);

        std::vector<double> out_p(x.size()), out_s(x.size());
        kernels::spmv(l1, x, out_p);
        kernels::serial::spmv(l1, x, out_s);
        CHECK(testsup::max_abs_diff(out_p, out_s) == 0.0);

        CHECK(kernels::dot(x, y) ==
              doctest::Approx(kernels::serial::dot(x, y)).epsilon(1e-13));
        CHECK(kernels::norm2(x) ==
              doctest::Approx(kernels::serial::norm2(x)).epsilon(1e-13));

        std::vector<double> ap = y, as = y;
        kernels::axpy(0.7, x, ap);
        kernels::serial::axpy(0.7, x, as);
        CHECK(testsup::max_abs_diff(ap, as) == 0.0);

        std::vector<double> sp = x;
        kernels::scale(-1.3, sp);
        bool scale_exact = true;
        for (std::size_t i = 0; i < sp.size(); ++i)
            scale_exact = scale_exact && sp[i] == -1.3 * x[i];
        CHECK(scale_exact);

        std::vector<double> cp(x.size(), 0.0);
        kernels::copy(x, cp);
        CHECK(cp == x);
    }
}

TEST_CASE("chunked dot is exactly reproducible across calls") {
    edgeflow::flowgen::Rng rng(33);
    const std::vector<double> x = testsup::random_signal(rng, 10000);
    const std::vector<double> y = testsup::random_signal(rng, 10000);
    const double first = kernels::dot(x, y);
    for (int i = 0; i < 5; ++i) CHECK(kernels::dot(x, y) == first);
}

TEST_CASE("kernel dimension mismatches throw") {
    const SparseMatrix i3 = SparseMatrix::identity(3);
    std::vector<double> x(2, 1.0), out(3, 0.0);
    CHECK_THROWS_AS(kernels::spmv(i3, x, out), DimensionError);
    std::vector<double> y(3, 1.0);
    CHECK_THROWS_AS(kernels::dot(x, y), DimensionError);
    CHECK_THROWS_AS(kernels::axpy(1.0, x, y), DimensionError);
}

TEST_CASE("dense multiply and matvec against hand values") {
    DenseMatrix a(2, 3);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(0, 2) = 3;
    a(1, 0) = 4;
    a(1, 1) = 5;
    a(1, 2) = 6;
    const DenseMatrix ata = multiply(a.transposed(), a);
    CHECK(ata(0, 0) == 17);
    CHECK(ata(1, 2) == 36);
    const std::vector<double> x{1.0, 0.0, -1.0};
    const auto y = matvec(a, x);
    CHECK(y[0] == -2.0);
    CHECK(y[1] == -2.0);
}

TEST_CASE("dense cholesky solves and rejects indefinite input") {
    DenseMatrix spd(2, 2);
    spd(0, 0) = 4;
    spd(0, 1) = 1;
    spd(1, 0) = 1;
    spd(1, 1) = 3;
    const DenseCholesky chol(spd);
    const std::vector<double> b{1.0, 2.0};
    const auto x = chol.solve(b);
    CHECK(4 * x[0] + x[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[0] + 3 * x[1] == doctest::Approx(2.0).epsilon(1e-14));

    DenseMatrix indef(2, 2);
    indef(0, 0) = 1;
    indef(0, 1) = 2;
    indef(1, 0) = 2;
    indef(1, 1) = 1;
    CHECK_THROWS_AS(DenseCholesky{indef}, NotPositiveDefiniteError);
}

TEST_CASE("jacobi eigensystem reproduces a known spectrum") {
    // triangle graph laplacian: eigenvalues 0, 3, 3
    const DenseMatrix l = to_dense(graph_laplacian(testsup::triangle()));
    const DenseEig eig = jacobi_eigensystem(l);
    REQUIRE(eig.values.size() == 3);
    CHECK(eig.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(eig.values[2] == doctest::Approx(3.0).epsilon(1e-12));
    // residual check: L v = lambda v
    for (int j = 0; j < 3; ++j) {
        std::vector<double> v(3);
        for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = eig.vectors(i, j);
        const auto lv = matvec(l, v);
        for (int i = 0; i < 3; ++i)
            CHECK(lv[static_cast<std::size_t>(i)] ==
                  doctest::Approx(eig.values[static_cast<std::size_t>(j)] *
                                  v[static_cast<std::size_t>(i)])
                      .epsilon(1e-10));
    }
}
