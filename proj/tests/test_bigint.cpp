#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilred/bigint.hpp"
#include "nilred/rng.hpp"

using nilred::BigInt;
using nilred::Rng;

namespace {

std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (m) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("int64 round trip and printing") {
  for (long long v : {0LL, 1LL, -1LL, 42LL, -4294967296LL, 1LL << 62, -(1LL << 62)}) {
    BigInt b(v);
    CHECK(b.to_string() == std::to_string(v));
    CHECK(b.fits_int64());
    CHECK(b.to_int64() == v);
  }
  // INT64_MIN has no positive counterpart; exercise it explicitly
  BigInt m(std::numeric_limits<long long>::min());
  CHECK(m.to_int64() == std::numeric_limits<long long>::min());
}

TEST_CASE("decimal parse round trip") {
  const char* big = "340282366920938463463374607431768211456";  // 2^128
  CHECK(BigInt::from_decimal(big).to_string() == big);
  CHECK(BigInt(2).pow(128).to_string() == big);
  CHECK(BigInt::from_decimal("-00123").to_string() == "-123");
  CHECK(BigInt::from_decimal("-0").is_zero());
  CHECK_THROWS(BigInt::from_decimal("12x4"));
}

TEST_CASE("arithmetic matches int128 on random inputs") {
  Rng rng(7);
  for (int it = 0; it < 2000; ++it) {
    long long a = rng.range(-1000000007LL, 1000000007LL) * rng.range(-1000003LL, 1000003LL);
    long long b = rng.range(-1000000007LL, 1000000007LL) * rng.range(-1000003LL, 1000003LL);
    BigInt A(a), B(b);
    CHECK((A + B).to_string() == i128_str(static_cast<__int128>(a) + b));
    CHECK((A - B).to_string() == i128_str(static_cast<__int128>(a) - b));
    CHECK((A * B).to_string() == i128_str(static_cast<__int128>(a) * b));
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(A, B, q, r);
      CHECK(q.to_string() == i128_str(static_cast<__int128>(a) / b));
      CHECK(r.to_string() == i128_str(static_cast<__int128>(a) % b));
    }
  }
}

TEST_CASE("multi-limb divmod reconstructs the dividend") {
  Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    BigInt a(1), b(1);
    int la = 1 + static_cast<int>(rng.below(6)), lb = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < la; ++i) a *= BigInt(rng.range(-2000000011LL, 2000000011LL) | 1);
    for (int i = 0; i < lb; ++i) b *= BigInt(rng.range(-2000000011LL, 2000000011LL) | 1);
    if (rng.below(2)) a = -a;
    if (rng.below(2)) b = -b;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)).is_zero());
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)).to_string() == "5");
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_string() == "6");
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    BigInt a(rng.range(-1000000LL, 1000000LL));
    BigInt b(rng.range(-1000000LL, 1000000LL));
    BigInt g = BigInt::gcd(a, b);
    if (!g.is_zero()) {
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      // multiplying both by a common factor scales the gcd
      BigInt f(rng.range(1, 1000));
      CHECK(BigInt::gcd(a * f, b * f) == g * f);
    }
  }
}

TEST_CASE("comparisons") {
  CHECK(BigInt(-3) < BigInt(2));
  CHECK(BigInt(-3) < BigInt(-2));
  CHECK(BigInt(5) > BigInt(4));
  CHECK(BigInt(0) >= BigInt(0));
  CHECK(BigInt::from_decimal("18446744073709551616") > BigInt::from_decimal("18446744073709551615"));
}
