#include <string>

#include "doctest.h"
#include "test_support.hpp"

#include "quatmoeb/random.hpp"

using namespace quatmoeb;
using ts::Mat;
using ts::Q;
using ts::S;

namespace {

constexpr ZClassType kAllTypes[] = {
    ZClassType::Scalar,          ZClassType::RealDiagDistinct,
    ZClassType::RealParabolic,   ZClassType::ComplexParabolic,
    ZClassType::ComplexDiagDistinct, ZClassType::MixedDiag,
    ZClassType::ComplexScalar,
};

}  // namespace

TEST_CASE("representatives map back to their own centralizer class") {
  for (ZClassType t : kAllTypes) {
    CAPTURE(toString(t));
    CHECK(zClassOf(representative<S>(t)) == t);
  }
}

TEST_CASE("centralizer class of the pinned dynamical representatives") {
  CHECK(zClassOf(Mat::identity()) == ZClassType::Scalar);
  CHECK(zClassOf(ts::formD(2, 0, 2, 0)) == ZClassType::Scalar);
  CHECK(zClassOf(Mat{-1, 0, 0, -1}) == ZClassType::Scalar);
  CHECK(zClassOf(ts::formD(2, 0, 1, 0)) == ZClassType::RealDiagDistinct);
  CHECK(zClassOf(Mat{0, 1, 1, 0}) == ZClassType::RealDiagDistinct);
  CHECK(zClassOf(Mat{1, 1, 0, 1}) == ZClassType::RealParabolic);
  CHECK(zClassOf(ts::formT(1, ts::kPi / 3)) == ZClassType::ComplexParabolic);
  CHECK(zClassOf(ts::formD(1, ts::kPi / 2, 1, ts::kPi / 3)) ==
        ZClassType::ComplexDiagDistinct);
  CHECK(zClassOf(ts::formD(2, ts::kPi / 3, 1, ts::kPi / 3)) ==
        ZClassType::ComplexDiagDistinct);
  CHECK(zClassOf(ts::formD(2, ts::kPi / 2, 1, 0)) == ZClassType::MixedDiag);
  CHECK(zClassOf(ts::formD(1, ts::kPi / 3, 1, ts::kPi / 3)) ==
        ZClassType::ComplexScalar);
}

TEST_CASE("centralizer class labels serialize to the documented strings") {
  CHECK(toString(ZClassType::Scalar) == "scalar");
  CHECK(toString(ZClassType::RealDiagDistinct) == "real-diag-distinct");
  CHECK(toString(ZClassType::RealParabolic) == "real-parabolic");
  CHECK(toString(ZClassType::ComplexParabolic) == "complex-parabolic");
  CHECK(toString(ZClassType::ComplexDiagDistinct) == "complex-diag-distinct");
  CHECK(toString(ZClassType::MixedDiag) == "mixed-diag");
  CHECK(toString(ZClassType::ComplexScalar) == "complex-scalar");

  CHECK(romanLabel(ZClassType::Scalar) == "i");
  CHECK(romanLabel(ZClassType::RealDiagDistinct) == "ii");
  CHECK(romanLabel(ZClassType::RealParabolic) == "iii");
  CHECK(romanLabel(ZClassType::ComplexParabolic) == "iv");
  CHECK(romanLabel(ZClassType::ComplexDiagDistinct) == "v");
  CHECK(romanLabel(ZClassType::MixedDiag) == "vi");
  CHECK(romanLabel(ZClassType::ComplexScalar) == "vii");
}

TEST_CASE("inCentralizer detects commuting pairs") {
  Rng rng(401);
  for (int t = 0; t < 20; ++t) {
    CHECK(inCentralizer(Mat::identity(), randomMatrix<S>(rng)));
  }
  CHECK(inCentralizer(Mat{1, 1, 0, 1}, Mat{Q::i(), 0, 0, Q::i()}));
  CHECK_FALSE(inCentralizer(Mat{Q::i(), 0, 0, Q::j()}, Mat{0, 1, 1, 0}));
  CHECK_FALSE(inCentralizer(ts::formD(2, 0, 1, 0), Mat{1, 1, 0, 1}));
}

TEST_CASE("sampled centralizer elements commute with the representative") {
  for (ZClassType t : kAllTypes) {
    CAPTURE(toString(t));
    const Mat rep = representative<S>(t);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Mat s = sampleCentralizer<S>(t, seed);
      CHECK(inCentralizer(rep, s, S(1e-9)));
      CHECK(inCentralizer(rep, s, S(1e-12)));
      CHECK(std::abs(embeddingDeterminant(s)) > 1e-8);
    }
  }
}

TEST_CASE("sampleCentralizer is deterministic per seed") {
  for (ZClassType t : kAllTypes) {
    const Mat a = sampleCentralizer<S>(t, 42);
    const Mat b = sampleCentralizer<S>(t, 42);
    CHECK(a == b);
    // A different seed virtually always gives a different element.
    const Mat c = sampleCentralizer<S>(t, 43);
    CHECK(frobeniusNorm(a - c) > 0);
  }
}

TEST_CASE("centralizer class is invariant under conjugation") {
  Rng rng(409);
  for (ZClassType t : kAllTypes) {
    CAPTURE(toString(t));
    const Mat rep = representative<S>(t);
    for (int k = 0; k < 10; ++k) {
      const Mat s = randomConjugator<S>(rng);
      CHECK(zClassOf(ts::conjugateBy(s, rep)) == t);
    }
  }
}

TEST_CASE("zClassOf can expose the normal form it used") {
  NormalForm<S> nf;
  const Mat m = ts::formD(2, ts::kPi / 3, 1, ts::kPi / 3);
  CHECK(zClassOf(m, kDefaultTol<S>, &nf) == ZClassType::ComplexDiagDistinct);
  CHECK(nf.kind == NormalFormKind::DiagonalDistinctModulus);
  CHECK(nf.residual <= 1e-8 * frobeniusNorm(m));

  NormalForm<S> nfT;
  CHECK(zClassOf(Mat{1, 1, 0, 1}, kDefaultTol<S>, &nfT) ==
        ZClassType::RealParabolic);
  CHECK(nfT.kind == NormalFormKind::Translation);
}
