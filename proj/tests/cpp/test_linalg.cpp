#include "arlab/linalg.hpp"

#include <Eigen/SVD>

#include "arlab/random.hpp"
#include "doctest.h"

using namespace arlab;

TEST_CASE("normalized HS norm on pinned matrices") {
    CHECK(normalized_hs_norm(Mat::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-14));

    Mat d(2, 2);
    d << 1, 0, 0, 0;
    CHECK(normalized_hs_norm(d) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    Mat n(2, 2);
    n << 0, 1, 0, 0;
    CHECK(normalized_hs_norm(n) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    Mat rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(normalized_hs_norm(rect), validation_error);
}

TEST_CASE("d2 distance basics") {
    Rng rng(7);
    Mat u = haar_unitary(rng, 3).m;
    CHECK(d2_distance(u, u) == doctest::Approx(0.0).epsilon(1e-15));

    Mat one(1, 1);
    one << 1;
    CHECK(d2_distance(one, Mat(Mat::Identity(2, 2))) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    CHECK(d2_distance(Mat(Mat::Identity(2, 2)), Mat(-Mat::Identity(2, 2))) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("d2 is a metric across dimensions") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Eigen::Index dx = 1 + rng.index(8), dy = 1 + rng.index(8), dz = 1 + rng.index(8);
        Mat x = haar_unitary(rng, dx).m;
        Mat y = haar_unitary(rng, dy).m;
        Mat z = haar_unitary(rng, dz).m;
        double dxy = d2_distance(x, y), dyx = d2_distance(y, x);
        double dxz = d2_distance(x, z), dzy = d2_distance(z, y);
        CHECK(dxy == doctest::Approx(dyx).epsilon(1e-13));
        CHECK(dxy >= 0.0);
        CHECK(dxy <= dxz + dzy + 1e-12);
        if (dx == dy) CHECK(d2_distance(x, x) < 1e-12);
    }
}

TEST_CASE("corner norm identity: compressed norm equals ambient norm over ||p||") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Index n = 3 + rng.index(6);
        Eigen::Index r = 1 + rng.index(n);
        Mat u = haar_unitary(rng, n).m;
        Mat v = u.leftCols(r);           // isometry onto the corner
        Mat p = v * v.adjoint();         // rank-r projection
        Mat a = ginibre(rng, r, r);      // element of the corner, in compressed form
        Mat x = v * a * v.adjoint();     // same element inside M_n

        double ambient = normalized_hs_norm(x) / normalized_hs_norm(p);
        double compressed = normalized_hs_norm(a);
        CHECK(ambient == doctest::Approx(compressed).epsilon(1e-12));
    }
}

TEST_CASE("hermitian spectrum atoms and moments") {
    SUBCASE("zero matrix") {
        SpectralMeasure mu = hermitian_spectrum(Mat::Zero(3, 3));
        REQUIRE(mu.atoms.size() == 1);
        CHECK(mu.atoms[0].value == doctest::Approx(0.0));
        CHECK(mu.atoms[0].weight == doctest::Approx(1.0));
    }
    SUBCASE("diag(0,2)") {
        Mat d(2, 2);
        d << 0, 0, 0, 2;
        SpectralMeasure mu = hermitian_spectrum(d);
        REQUIRE(mu.atoms.size() == 2);
        CHECK(mu.atoms[0].value == doctest::Approx(0.0));
        CHECK(mu.atoms[0].weight == doctest::Approx(0.5));
        CHECK(mu.atoms[1].value == doctest::Approx(2.0));
        CHECK(mu.atoms[1].weight == doctest::Approx(0.5));
    }
    SUBCASE("laplacian of the Z/3 shift") {
        // 1 - (sigma + sigma^2)/2 for the cyclic shift sigma on C^3. The
        // eigenvalues are 1 - cos(2 pi k / 3): 0 once and 3/2 twice.
        Mat s = Mat::Zero(3, 3);
        s(1, 0) = s(2, 1) = s(0, 2) = 1;
        Mat lap = Mat::Identity(3, 3) - (s + s.adjoint()) / 2.0;
        SpectralMeasure mu = hermitian_spectrum(lap);
        REQUIRE(mu.atoms.size() == 2);
        CHECK(mu.atoms[0].value == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(mu.atoms[0].weight == doctest::Approx(1.0 / 3.0));
        CHECK(mu.atoms[1].value == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(mu.atoms[1].weight == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("moment identity tau(x^k) on random Hermitian") {
        Rng rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::Index n = 2 + rng.index(15);
            Mat h = random_hermitian(rng, n);
            SpectralMeasure mu = hermitian_spectrum(h, 1e-8, 0.0);
            Mat power = Mat::Identity(n, n);
            for (int k = 0; k <= 8; ++k) {
                double tr = normalized_trace(power).real();
                CHECK(mu.moment(k) == doctest::Approx(tr).epsilon(1e-10).scale(std::abs(tr) + 1));
                power = power * h;
            }
        }
    }
    SUBCASE("rejects non-Hermitian input") {
        Mat n(2, 2);
        n << 0, 1, 0, 0;
        CHECK_THROWS_AS(hermitian_spectrum(n), validation_error);
    }
}

TEST_CASE("spectral interval weight") {
    Mat d = Mat::Zero(3, 3);
    d(1, 1) = d(2, 2) = 1.5;
    CHECK(spectral_interval_weight(d, 0.1, 0.9) == doctest::Approx(0.0));
    CHECK(spectral_interval_weight(d, 1.0, 2.0) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(spectral_interval_weight(d, 1.0, 0.5), validation_error);

    Rng rng(17);
    Mat h = random_hermitian(rng, 6);
    double r = operator_norm(h);
    CHECK(spectral_interval_weight(h, -r - 1e-9, r + 1e-9) == doctest::Approx(1.0));
}

TEST_CASE("closest unitary") {
    Rng rng(23);
    Mat u = haar_unitary(rng, 4).m;
    CHECK((closest_unitary(u).m - u).norm() < 1e-10);

    CHECK((closest_unitary(Mat(2.0 * Mat::Identity(3, 3))).m - Mat::Identity(3, 3)).norm() <
          1e-12);

    SUBCASE("beats random unitary perturbations in Frobenius distance") {
        Mat x = ginibre(rng, 3, 3) + 3.0 * Mat::Identity(3, 3);  // comfortably full rank
        Mat best = closest_unitary(x).m;
        double ref = (x - best).norm();
        for (int i = 0; i < 1000; ++i) {
            Mat h = random_hermitian(rng, 3);
            h *= 0.2 / std::max(1.0, operator_norm(h));
            Mat pert = best * (Mat::Identity(3, 3) + Complex(0, 1) * h);
            pert = closest_unitary(pert).m;  // keep the competitor unitary
            CHECK((x - pert).norm() >= ref - 1e-9);
        }
    }

    SUBCASE("rank-deficient is rejected") {
        Mat z = Mat::Zero(2, 2);
        z(0, 0) = 1;
        CHECK_THROWS_AS(closest_unitary(z), validation_error);
    }
}

TEST_CASE("top singular data") {
    SUBCASE("rank one projection") {
        Rng rng(29);
        Vec xi = random_unit_vector(rng, 5);
        Mat t = xi * xi.adjoint();
        SingularTriple s = svd_top(t);
        CHECK(s.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.lambda2 < 1e-7);
        CHECK(std::abs(s.top_right_vector.dot(xi)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("diag(0.8, 0.6)") {
        Mat t(2, 2);
        t << 0.8, 0, 0, 0.6;
        SingularTriple s = svd_top(t);
        CHECK(s.lambda1 == doctest::Approx(0.8));
        CHECK(s.lambda2 == doctest::Approx(0.6));
        CHECK(std::abs(s.top_right_vector[0]) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("matches a full SVD on random input") {
        Rng rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            Mat t = ginibre(rng, 8, 8);
            SingularTriple s = svd_top(t);
            Eigen::JacobiSVD<Mat> svd(t, Eigen::ComputeFullV);
            CHECK(s.lambda1 == doctest::Approx(svd.singularValues()[0]).epsilon(1e-9));
            CHECK(s.lambda2 == doctest::Approx(svd.singularValues()[1]).epsilon(1e-9));
            Vec oracle = svd.matrixV().col(0);
            CHECK(std::abs(s.top_right_vector.dot(oracle)) == doctest::Approx(1.0).epsilon(1e-9));
            // Frobenius accounting of the two largest singular values.
            double fro2 = t.squaredNorm();
            CHECK(s.lambda1 * s.lambda1 + s.lambda2 * s.lambda2 <= fro2 + 1e-9);
        }
    }
}

TEST_CASE("unitary matrix validation") {
    Rng rng(37);
    CHECK_NOTHROW(UnitaryMatrix(haar_unitary(rng, 5).m));
    Mat bad = Mat::Identity(3, 3);
    bad(0, 0) = 1.5;
    CHECK_THROWS_AS(UnitaryMatrix{bad}, validation_error);
    Mat nan = Mat::Identity(2, 2);
    nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(UnitaryMatrix{nan}, validation_error);
}
