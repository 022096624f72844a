#include "nestrad/radicals.hpp"

#include "doctest.h"
#include "nestrad/errors.hpp"
#include "nestrad/precision.hpp"
#include "test_support.hpp"

using namespace nestrad;
using testsupport::dec;
using testsupport::encloses_near;
using testsupport::pow10_inv;

namespace {

// Oracle decimals, truncated from 120-digit arbitrary-precision runs.
const char* kSqrt2 = "1.41421356237309504880168872420969807856967188";
const char* kC2 = "1.84775906502257351225636637879357657364483325";
const char* kC5 = "1.99759091241034478542954320951820138888640723";
const char* kGap2 = "0.765366864730179543456919968060797733522689125";
const char* kTanPi8 = "0.414213562373095048801688724209698078569671875";
const char* kLimit2 = "3.06146745892071817382767987224319093409075650";
const char* kLimit4 = "3.13654849054593926381425804443653906755637354";
const char* kLimit5 = "3.14033115695475291231711852433169013214370323";
const char* kShiftedOneTerm = "1.53073372946035908691383993612159546704537825";

const mpq_class kSlack = pow10_inv(40);

}  // namespace

TEST_CASE("c_k matches frozen chain values") {
  CHECK(encloses_near(compute_c(0, 64), 0, 0, 0));
  CHECK(encloses_near(compute_c(1, 64), dec(kSqrt2), kSlack,
                      mpq_class(Dyadic(BigInt(1), -62).to_rational())));
  CHECK(encloses_near(compute_c(2, 128), dec(kC2), kSlack,
                      Dyadic(BigInt(1), -126).to_rational()));
  CHECK(encloses_near(compute_c(5, 160), dec(kC5), kSlack,
                      Dyadic(BigInt(1), -158).to_rational()));
}

TEST_CASE("c_k stays inside [0, 2] up to rounding slack") {
  for (std::int64_t k : {0, 1, 2, 5, 10, 30, 60}) {
    DyadicInterval c = compute_c(k, 64);
    CHECK(c.lo_scaled() >= 0);
    CHECK(c.hi().to_rational() <= 2 + Dyadic(BigInt(1), -62).to_rational());
  }
}

TEST_CASE("enclosures are nondecreasing in k up to rounding slack") {
  std::int64_t p = 96;
  mpq_class slack = Dyadic(BigInt(1), -p + 2).to_rational();
  DyadicInterval prev = compute_c(0, p);
  for (std::int64_t k = 1; k <= 40; ++k) {
    DyadicInterval cur = compute_c(k, p);
    CHECK(cur.hi().to_rational() + slack >= prev.hi().to_rational());
    prev = cur;
  }
}

TEST_CASE("monotone refinement: doubling precision shrinks the enclosure") {
  for (std::int64_t p : {16, 32, 64, 128}) {
    DyadicInterval coarse = compute_c(12, p);
    DyadicInterval fine = compute_c(12, 2 * p);
    CHECK(fine.is_subset_of(coarse));
    CHECK(fine.width().to_rational() <= coarse.width().to_rational());
  }
}

TEST_CASE("telescoping: (2 - c_k)(2 + c_k) overlaps 2 - c_{k-1}") {
  std::int64_t p = 256;
  for (std::int64_t k = 1; k <= 60; ++k) {
    DyadicInterval two = DyadicInterval::from_integer(BigInt(2), p);
    DyadicInterval ck = compute_c(k, p);
    DyadicInterval lhs = (two - ck) * (two + ck);
    DyadicInterval rhs = two - compute_c(k - 1, p);
    // same real value, so honest enclosures must intersect
    CHECK(lhs.lo().to_rational() <= rhs.hi().to_rational());
    CHECK(rhs.lo().to_rational() <= lhs.hi().to_rational());
  }
}

TEST_CASE("gap root survives the cancellation at the requested precision") {
  // 2 - c_{k-1} is about pi^2/4^k; at k = 40 a naive fixed-precision
  // subtraction at p = 64 would have no correct bits left.
  DyadicInterval g = compute_sqrt_gap(40, 64);
  CHECK(g.lo_scaled() > 0);
  CHECK(g.width().to_rational() <= Dyadic(BigInt(1), -64).to_rational());
  CHECK(encloses_near(compute_sqrt_gap(2, 96), dec(kGap2), kSlack,
                      Dyadic(BigInt(1), -96).to_rational()));
  // sqrt(2 - c_0) = sqrt(2)
  CHECK(encloses_near(compute_sqrt_gap(1, 96), dec(kSqrt2), kSlack,
                      Dyadic(BigInt(1), -96).to_rational()));
}

TEST_CASE("radical state ties the pieces together") {
  RadicalState st = make_radical_state(2, 96);
  CHECK(st.k == 2);
  CHECK(st.precision == 96);
  CHECK(st.sqrt_two_minus_c_prev.lo_scaled() > 0);
  CHECK(encloses_near(st.c_k, dec(kC2), kSlack,
                      Dyadic(BigInt(1), -94).to_rational()));
}

TEST_CASE("arctan argument equals the half-angle tangent") {
  CHECK(encloses_near(arctan_argument(2, 128), dec(kTanPi8), kSlack,
                      Dyadic(BigInt(1), -120).to_rational()));
  // k=10: enclosure sits within relative error 1e-3 of pi / 2^11
  DyadicInterval a = arctan_argument(10, 64);
  mpq_class target = dec("0.00153398078788564122971808758949194476767439912");
  CHECK(a.lo().to_rational() >= target * mpq_class(999, 1000));
  CHECK(a.hi().to_rational() <= target * mpq_class(1001, 1000));
}

TEST_CASE("radical limit values: frozen oracles") {
  CHECK(encloses_near(pi_from_radical_limit(2, 128), dec(kLimit2), kSlack,
                      Dyadic(BigInt(1), -120).to_rational()));
  CHECK(encloses_near(pi_from_radical_limit(4, 128), dec(kLimit4), kSlack,
                      Dyadic(BigInt(1), -120).to_rational()));
  CHECK(encloses_near(pi_from_radical_limit(5, 128), dec(kLimit5), kSlack,
                      Dyadic(BigInt(1), -120).to_rational()));
}

TEST_CASE("radical limit approaches pi from below") {
  mpq_class pi100 = dec(
      "3.14159265358979323846264338327950288419716939937510582097494459230781"
      "6406286208998628034825342117068");
  mpq_class prev_gap(4);
  for (std::int64_t k : {5, 10, 20, 40}) {
    DyadicInterval v = pi_from_radical_limit(k, 160);
    CHECK(v.hi().to_rational() < pi100);  // strictly below pi
    mpq_class gap = pi100 - v.hi().to_rational();
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("tail sums enclose their series and respect the stated bounds") {
  // variant Shifted, k=1, single term: partial sum is 2 sqrt(2 - c_1)
  DyadicInterval one_term = pi_from_tail_sum(1, 1, 96, TailVariant::Shifted);
  mpq_class near = pow10_inv(30);  // dominates the enclosure width
  CHECK(one_term.lo().to_rational() <= dec(kShiftedOneTerm) + near);
  CHECK(one_term.lo().to_rational() >= dec(kShiftedOneTerm) - near);
  // the documented tail bound 2^(3 - n_terms) = 4 is added to hi only
  mpq_class hi_minus_lo =
      one_term.hi().to_rational() - one_term.lo().to_rational();
  CHECK(hi_minus_lo >= 4);
  CHECK(hi_minus_lo <= 4 + pow10_inv(20));

  mpq_class pi100 = dec(
      "3.14159265358979323846264338327950288419716939937510582097494459230781"
      "6406286208998628034825342117068");
  // the scaled series values differ from pi by O(4^-k); at k = 12 that is
  // below 1e-7, so 40-term partial sums land within 1e-5 of pi
  for (TailVariant v :
       {TailVariant::Quotient, TailVariant::Plain, TailVariant::Shifted}) {
    DyadicInterval iv = pi_from_tail_sum(12, 40, 96, v);
    CHECK(iv.lo().to_rational() >= pi100 - mpq_class(1, 100000));
    CHECK(iv.lo().to_rational() <= pi100 + mpq_class(1, 100000));
    CHECK(iv.hi().to_rational() >= pi100 - mpq_class(1, 100000));
    CHECK(iv.hi().to_rational() <= pi100 + mpq_class(1, 10000));
  }
  // sine-based partial sums stay strictly below pi, tangent-based ones
  // overshoot it (tan x > x)
  CHECK(pi_from_tail_sum(12, 40, 96, TailVariant::Plain).lo().to_rational() <
        pi100);
  CHECK(pi_from_tail_sum(12, 40, 96, TailVariant::Shifted).lo().to_rational() <
        pi100);
  CHECK(pi_from_tail_sum(12, 40, 96, TailVariant::Quotient).lo().to_rational() >
        pi100);
  // growing n_terms tightens the interval onto the series value
  mpq_class width_prev(100);
  for (std::int64_t n_terms : {5, 10, 20}) {
    DyadicInterval iv = pi_from_tail_sum(12, n_terms, 96, TailVariant::Plain);
    mpq_class w = iv.width().to_rational();
    CHECK(w < width_prev);
    CHECK(w <= Dyadic(BigInt(1), 3 - n_terms).to_rational() + pow10_inv(20));
    width_prev = w;
  }
}

TEST_CASE("quotient and plain variants approach the same limit") {
  mpq_class pi100 = dec(
      "3.14159265358979323846264338327950288419716939937510582097494459230781"
      "6406286208998628034825342117068");
  mpq_class gap_prev(1);
  for (std::int64_t k : {6, 10, 14}) {
    DyadicInterval q = pi_from_tail_sum(k, 60, 96, TailVariant::Quotient);
    DyadicInterval pl = pi_from_tail_sum(k, 60, 96, TailVariant::Plain);
    mpq_class gap = abs(q.lo().to_rational() - pl.lo().to_rational());
    CHECK(gap < gap_prev);  // finite-n difference shrinks with k
    gap_prev = gap;
    CHECK(abs(q.lo().to_rational() - pi100) < mpq_class(1, 1000));
  }
}

TEST_CASE("precondition violations throw") {
  CHECK_THROWS_AS(compute_c(-1, 64), std::invalid_argument);
  CHECK_THROWS_AS(compute_c(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(compute_sqrt_gap(0, 64), std::invalid_argument);
  CHECK_THROWS_AS(pi_from_tail_sum(0, 1, 64, TailVariant::Plain),
                  std::invalid_argument);
  CHECK_THROWS_AS(pi_from_tail_sum(1, 0, 64, TailVariant::Plain),
                  std::invalid_argument);
}

TEST_CASE("precision ceiling stops the escalation loops") {
  std::int64_t saved = precision_ceiling();
  set_precision_ceiling(64);
  CHECK_THROWS_AS(compute_sqrt_gap(100, 64), PrecisionExhausted);
  set_precision_ceiling(saved);
}
