#pragma once

// Built-in identities with their default verification grids.
//
// Entries are stored as DSL text and parsed once on first use. Binomials
// whose upper index is a rational parameter are written with the lower index
// that stays integer-valued, e.g. binom(k + r, k) instead of binom(k + r, r).

#include <mutex>
#include <string>
#include <vector>

#include "combid/dsl.hpp"
#include "combid/grid.hpp"

namespace combid {

struct CatalogEntry {
  std::string id;
  std::string name;
  std::string anchor;  // where the identity comes from, in words
  std::string source;  // DSL text
  std::string grid;    // default grid
  bool fixture = false;
  IdentityDescriptor desc;
  GridSpec default_grid;
};

namespace detail {

struct RawEntry {
  const char* id;
  const char* name;
  const char* anchor;
  const char* grid;
  const char* source;
  bool fixture = false;
};

// clang-format off
inline const RawEntry kRawCatalog[] = {
{"C01", "poly1", "first polynomial form of the Frisch transform",
 "n=0..8; r=1..6,7/2,5/3; s=1..5 | s <= r", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(k + r, s)^-1 * x^k
  == sum[k=0..n] (-1)^k * s / (k + s) * binom(n, k) * binom(k + r, k + s)^-1 * x^k * (1+x)^(n - k);
)"},
{"C02", "poly2", "polynomial form of the Klamkin transform",
 "n=0..8; r=0..12,23/2,35/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(r, k + s)^-1 * x^k
  == sum[k=0..n] (-1)^(n - k) * (r + 1) / (r - k + 1) * binom(n, k) * binom(r - k, n + s - k)^-1 * (1-x)^(n - k);
)"},
{"C03", "frisch", "Frisch's identity",
 "n=0..10; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(k + r, s)^-1
  == sum[k=0..0] s / (n + s) * binom(n + r, n + s)^-1;
)"},
{"C04", "klamkin", "Klamkin's identity",
 "n=0..10; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(r, k + s)^-1
  == sum[k=0..0] (r + 1) / (r - n + 1) * binom(r - n, s)^-1;
)"},
{"C05", "gen-frisch-1", "Frisch transform of the Chu-Vandermonde convolution",
 "n=0..8; u=-1,0,1,2,1/2,7/3; r=1..5,7/2; s=1..3 | inregion", R"(
params n:nat, u:rat, r:rat, s:int;
require notnegint(s);
region r - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(u, n - k) * binom(k + r, s)^-1
  == sum[k=0..n] (-1)^k * s / (k + s) * binom(n, k) * binom(u + n - k, n - k) * binom(k + r, k + s)^-1;
)"},
{"C06", "gen-frisch-2", "Frisch transform of Gould's convolution",
 "n=0..8; u=-1,0,1,2,1/2,7/3; r=1..5,7/2; s=1..3 | inregion", R"(
params n:nat, u:rat, r:rat, s:int;
require notnegint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(u + n - k, n - k) * binom(k + r, s)^-1
  == sum[k=0..n] s / (k + s) * binom(n, k) * binom(u, n - k) * binom(k + r, k + s)^-1;
)"},
{"C07", "binom-transform", "reciprocal-binomial companion of Frisch's identity",
 "n=0..10; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k / (k + s) * binom(n, k) * binom(k + r, k + s)^-1
  == sum[k=0..0] 1 / s * binom(n + r, s)^-1;
)"},
{"C08", "binom-transform-diagonal", "the case s = r of the Frisch companion",
 "n=0..10; r=1..8,1/2,5/3,7/2", R"(
params n:nat, r:rat;
require notnonposint(r);
sum[k=0..n] (-1)^k / (k + r) * binom(n, k)
  == sum[k=0..0] 1 / r * binom(n + r, n)^-1;
)"},
{"C09", "klamkin-companion", "reciprocal-binomial companion of Klamkin's identity",
 "n=0..10; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] (-1)^k / (r - k + 1) * binom(n, k) * binom(r - k, n + s - k)^-1
  == sum[k=0..0] (-1)^n / (r + 1) * binom(r, s)^-1;
)"},
{"C10", "simons-frisch", "Frisch transform of Simons' identity",
 "n=0..8; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(n + k, k) * binom(k + r, s)^-1
  == sum[k=0..n] (-1)^(n - k) * s / (k + s) * binom(n, k) * binom(n + k, k) * binom(k + r, k + s)^-1;
)"},
{"C11", "two-denominator", "Frisch transform applied twice",
 "n=0..6; r=1..4,7/2; s=1..3; t=1..4,11/3; u=1..3 | inregion", R"(
params n:nat, r:rat, s:int, t:rat, u:int;
require notnegint(s), notnegint(u);
region r - s + 1 > 0, t - u + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(k + r, s)^-1 * binom(k + t, u)^-1
  == sum[k=0..n] s * u / ((k + s) * (n - k + u)) * binom(n, k) * binom(k + r, k + s)^-1 * binom(n + t, n - k + u)^-1;
)"},
{"C12", "two-denominator-equal", "the case t = r, u = s of the double Frisch transform",
 "n=0..8; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(k + r, s)^-2
  == sum[k=0..n] s^2 / ((k + s) * (n - k + s)) * binom(n, k) * binom(k + r, k + s)^-1 * binom(n + r, n - k + s)^-1;
)"},
{"C13", "two-denominator-diagonal", "the further case s = r of the double Frisch transform",
 "n=0..10; r=1..8,1/2,5/3,7/2", R"(
params n:nat, r:rat;
require notnegint(r);
sum[k=0..n] (-1)^k * binom(n, k) * binom(k + r, k)^-2
  == sum[k=0..n] r^2 / ((k + r) * (n - k + r)) * binom(n, k) * binom(n + r, k)^-1;
)"},
{"C14", "double-klamkin", "Klamkin transform applied to a Klamkin-type sum",
 "n=0..6; r=0..9,19/2; s=0..2; t=0..9,17/2; u=0..2", R"(
params n:nat, r:rat, s:int, t:rat, u:int;
require notnegint(s), notnegint(t);
region r - n - s > 0, t - n - u + 1 > 0;
sum[k=0..n] 1 / (t - k + 1) * binom(n, k) * binom(t - k, n + u - k)^-1 * binom(r, n - k + s)^-1
  == sum[k=0..n] (r + 1) / ((t + 1) * (r - k + 1)) * binom(n, k) * binom(t, k + u)^-1 * binom(r - k, s)^-1;
)"},
{"C15", "double-klamkin-alternating", "alternating companion of the double Klamkin transform",
 "n=0..6; r=0..9,19/2; s=0..2; t=0..9,17/2; u=0..2", R"(
params n:nat, r:rat, s:int, t:rat, u:int;
require notnegint(s), notnegint(t);
region r - n - s > 0, t - n - u + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(t, k + u)^-1 * binom(r, k + s)^-1
  == sum[k=0..n] (-1)^(n - k) * (r + 1) * (t + 1) / ((t - k + 1) * (r - n + k + 1)) * binom(n, k) * binom(t - k, n + u - k)^-1 * binom(r - n + k, s)^-1;
)"},
{"C16", "klamkin-squared", "alternating sum with a squared reciprocal binomial",
 "n=0..8; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(r, k + s)^-2
  == sum[k=0..n] (-1)^(n - k) * (r + 1)^2 / ((r - n - s + 1) * (s + 1)) * binom(n, k) * binom(r - k + 1, n + s - k)^-1 * binom(r - n + k + 1, s + 1)^-1;
)"},
{"C17", "simons-klamkin", "Klamkin transform of Simons' identity",
 "n=0..8; r=0..16,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(n + k, k) * binom(r, k + s)^-1
  == sum[k=0..n] (r + 1) * (-1)^n * (-1)^k / (r - k + 1) * binom(n, k) * binom(n + k, k) * binom(r - k, s)^-1;
)"},
{"C18", "gen-klamkin-1", "Klamkin transform of the Chu-Vandermonde convolution",
 "n=0..8; u=-1,0,1,2,1/2,7/3; r=0..12,23/2; s=0..3 | inregion", R"(
params n:nat, u:rat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] binom(n, k) * binom(u + n - k, n - k) * binom(r, k + s)^-1
  == sum[k=0..n] (r + 1) / (r - k + 1) * binom(n, k) * binom(u, n - k) * binom(r - k, s)^-1;
)"},
{"C19", "gen-klamkin-2", "Klamkin transform of Gould's convolution",
 "n=0..8; u=-1,0,1,2,1/2,7/3; r=0..12,23/2; s=0..3 | inregion", R"(
params n:nat, u:rat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k) * binom(u, n - k) * binom(r, k + s)^-1
  == sum[k=0..n] (r + 1) * (-1)^k / (r - k + 1) * binom(n, k) * binom(u + n - k, n - k) * binom(r - k, s)^-1;
)"},
{"C20", "frisch-extension", "moment extension of Frisch's identity",
 "m=0..5; n=0..8; r=1..5,7/2; s=1..3 | inregion", R"(
params m:nat, n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * k^m * binom(n, k) * binom(k + r, s)^-1
  == sum[k=0..min(m, n)] (-1)^k * fact(k) * rstirling(m, k, n - k) * s / (n - k + s) * binom(n, k) * binom(n - k + r, n - k + s)^-1;
)"},
{"C21", "frisch-extension-k", "first moment of Frisch's identity",
 "n=0..10; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * k * binom(n, k) * binom(k + r, s)^-1
  == sum[k=0..0] n * s / (n + r) * (s - r - 1) / (n + s - 1) * binom(n + r - 1, n + s - 1)^-1;
)"},
{"C22", "frisch-extension-k2", "second moment of Frisch's identity",
 "n=0..10; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * k^2 * binom(n, k) * binom(k + r, s)^-1
  == sum[k=0..0] n * s / (n + r) * (r - s + 1) / (r + n - 1) * (n * (r - s + 1) - r) / (n + s - 2) * binom(n + r - 2, n + s - 2)^-1;
)"},
{"C23", "frisch-extension-k-diagonal", "first moment of Frisch's identity at s = r",
 "n=0..10; r=1..6,7/2,11/3", R"(
params n:nat, r:rat;
require notnonposint(r);
sum[k=0..n] (-1)^k * k * binom(n, k) * binom(k + r, k)^-1
  == sum[k=0..0] -(n * r) / ((n + r - 1) * (n + r));
)"},
{"C24", "frisch-extension-k2-diagonal", "second moment of Frisch's identity at s = r",
 "n=0..10; r=1..6,7/2,11/3", R"(
params n:nat, r:rat;
require notnonposint(r);
sum[k=0..n] (-1)^k * k^2 * binom(n, k) * binom(k + r, k)^-1
  == sum[k=0..0] n * r * (n - r) / ((n + r) * (n + r - 1) * (n + r - 2));
)"},
{"C25", "klamkin-extension", "moment extension of Klamkin's identity",
 "m=0..5; n=0..8; r=0..14,23/2; s=0..3 | inregion", R"(
params m:nat, n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] k^m * binom(n, k) * binom(r, k + s)^-1
  == sum[k=0..min(m, n)] fact(k) * stirling(m, k) * (r + 1) / (r - n + k + 1) * binom(n, k) * binom(r - n + k, k + s)^-1;
)"},
{"C26", "klamkin-extension-k", "first moment of Klamkin's identity",
 "n=0..10; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] k * binom(n, k) * binom(r, k + s)^-1
  == sum[k=0..0] n * (r + 1) / (r - n + 2) * binom(r - n + 1, s + 1)^-1;
)"},
{"C27", "klamkin-extension-k2", "second moment of Klamkin's identity",
 "n=0..10; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] k^2 * binom(n, k) * binom(r, k + s)^-1
  == sum[k=0..0] n * (r + 1) * (n * (s + 1) + r - s + 1) / ((n - r - 2) * (n - r - 3)) * binom(r - n + 1, s + 1)^-1;
)"},
{"C28", "geometric", "non-alternating sum of reciprocal binomials",
 "n=0..10; r=1..6,7/2,11/3; s=2..5", R"(
params n:nat, r:rat, s:int;
require notnonposint(r), notnonposint(s);
sum[k=0..n] binom(k + r, s)^-1
  == sum[k=0..0] s / (s - 1) * (binom(r - 1, s - 1)^-1 - binom(n + r, s - 1)^-1);
)"},
{"C29", "lower-index-alternating", "alternating sum of reciprocal binomials over the lower index",
 "n=0..10; r=0..14,23/2,41/3; s=0..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnegint(s);
region r - n - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(r, k + s)^-1
  == sum[k=0..0] (r + 1) / (s + 1) * binom(r + 2, s + 1)^-1 + sum[k=0..0] (-1)^n * (r + 1) / (n + s + 2) * binom(r + 2, n + s + 2)^-1;
)"},
{"C30", "waring", "Frisch transform of Waring's formula",
 "n=1..10; r=1..6,7/2,11/3; s=1..4 | inregion", R"(
params n:nat, r:rat, s:int;
require n >= 1, notnegint(s);
region r - s + 1 > 0;
sum[k=0..floor(n / 2)] (-1)^k * n / ((n - k) * (k + s)) * binom(n - k, k) * binom(2 * k + r, k + s)^-1
  == sum[k=0..0] 1 / s * binom(n + r, s)^-1 + sum[k=0..0] 1 / (n + s) * binom(n + r, n + s)^-1;
)"},
{"C31", "macmahon-frisch", "Frisch transform of MacMahon's cubic identity",
 "n=0..6; r=1..5,7/2; s=1..3 | inregion", R"(
params n:nat, r:rat, s:int;
require notnonposint(s);
region r - s + 1 > 0;
sum[k=0..n] (-1)^k * binom(n, k)^3 * binom(k + r, s)^-1
  == sum[k=0..n] (-1)^k * binom(n - k, k) * (s / (n - 2 * k + s)) * binom(n + k, 2 * k) * binom(2 * k, k) * binom(n + r - k, n - 2 * k + s)^-1;
)"},
{"C32", "dixon-complement-general", "moments of the alternating sum of cubed binomials",
 "m=1..6; n=0..6", R"(
params m:nat, n:nat;
require m >= 1;
sum[k=0..2 * n] (-1)^k * k^m * binom(2 * n, k)^3
  == sum[k=max(0, n - m + 1)..n] (-1)^k * binom(2 * n + k, 2 * k) * binom(2 * k, k) * binom(2 * n - k, k) * dsum(2 * n - 2 * k, k, m);
)"},
{"C33", "dixon-complement-1", "first moment of the alternating sum of cubed binomials",
 "n=0..8", R"(
params n:nat;
sum[k=0..2 * n] (-1)^k * k * binom(2 * n, k)^3
  == sum[k=0..0] (-1)^n * n * binom(2 * n, n) * binom(3 * n, n);
)"},
{"C34", "dixon-complement-2", "second moment of the alternating sum of cubed binomials",
 "n=0..8", R"(
params n:nat;
sum[k=0..2 * n] (-1)^k * k^2 * binom(2 * n, k)^3
  == sum[k=0..0] (-1)^n * 2 * n^2 / 3 * binom(2 * n, n) * binom(3 * n, n);
)"},
{"C35", "dixon", "Dixon's identity, both parities",
 "n=0..10", R"(
params n:nat;
sum[k=0..n] (-1)^k * binom(n, k)^3
  == sum[k=0..0] even(n) * (-1)^(n / 2) * binom(n, n / 2) * binom(3 * n / 2, n);
)"},
{"C36", "dixon-even", "Dixon's identity for even length",
 "n=0..8", R"(
params n:nat;
sum[k=0..2 * n] (-1)^k * binom(2 * n, k)^3
  == sum[k=0..0] (-1)^n * binom(2 * n, n) * binom(3 * n, n);
)"},
{"C37", "simons-moment-1", "first moment of Simons' alternating sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k * binom(n, k) * binom(n + k, k)
  == sum[k=0..0] (-1)^n * n * (n + 1);
)"},
{"C37.2", "simons-moment-2", "second moment of Simons' alternating sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k^2 * binom(n, k) * binom(n + k, k)
  == sum[k=0..0] (-1)^n * n^2 * (n + 1)^2 / 2;
)"},
{"C37.3", "simons-moment-3", "third moment of Simons' alternating sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k^3 * binom(n, k) * binom(n + k, k)
  == sum[k=0..0] (-1)^n * n^2 * (n + 1)^2 * (n^2 + n + 1) / 6;
)"},
{"C38", "simons-reflected-moment-1", "first moment of the reflected Simons sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k * binom(n, k) * binom(2 * n - k, n - k)
  == sum[k=0..0] -n^2;
)"},
{"C38.2", "simons-reflected-moment-2", "second moment of the reflected Simons sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k^2 * binom(n, k) * binom(2 * n - k, n - k)
  == sum[k=0..0] n^2 * (n^2 - 2 * n - 1) / 2;
)"},
{"C38.3", "simons-reflected-moment-3", "third moment of the reflected Simons sum",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] (-1)^k * k^3 * binom(n, k) * binom(2 * n - k, n - k)
  == sum[k=0..0] -(n^2 * (n^4 - 6 * n^3 + 4 * n^2 + 6 * n + 1)) / 6;
)"},
{"C39", "simons-moment", "moments of Simons' alternating sum",
 "m=0..6; n=0..10", R"(
params m:nat, n:nat;
sum[k=0..n] (-1)^(n - k) * k^m * binom(n, k) * binom(n + k, k)
  == sum[k=0..min(m, n)] fact(k) * stirling(m, k) * binom(n, k) * binom(n + k, k);
)"},
{"C40", "simons-reflected-moment", "moments of the reflected Simons sum",
 "m=0..6; n=0..10", R"(
params m:nat, n:nat;
sum[k=0..n] (-1)^k * k^m * binom(n, k) * binom(2 * n - k, n - k)
  == sum[k=0..min(m, n)] (-1)^k * fact(k) * rstirling(m, k, n - k) * binom(n, k) * binom(n + k, k);
)"},
{"F01", "geom-sum", "finite geometric series rewritten in powers of 1-x",
 "n=0..12", R"(
params n:nat;
sum[k=0..n] 1 * x^k == sum[k=0..n] (-1)^k * binom(n + 1, k + 1) * (1-x)^k;
)", true},
{"F02", "simons", "Simons' identity",
 "n=0..10", R"(
params n:nat;
sum[k=0..n] (-1)^k * binom(n, k) * binom(n + k, k) * x^k
  == sum[k=0..n] (-1)^(n - k) * binom(n, k) * binom(n + k, k) * (1-x)^k;
)", true},
{"F03", "gould", "Gould's convolution as a polynomial identity",
 "n=0..10; u=-3..3,1/2,7/3", R"(
params n:nat, u:rat;
sum[k=0..n] binom(n, k) * binom(u, k) * x^(n - k)
  == sum[k=0..n] (-1)^(n - k) * binom(n, k) * binom(u + k, k) * (1-x)^(n - k);
)", true},
{"F04", "waring", "Waring's formula for x^n + (1-x)^n",
 "n=1..12", R"(
params n:nat;
require n >= 1;
sum[k=0..floor(n / 2)] (-1)^k * n / (n - k) * binom(n - k, k) * x^k * (1-x)^k
  == sum[k=0..0] 1 * x^n + sum[k=0..0] 1 * (1-x)^n;
)", true},
{"F05", "macmahon", "MacMahon's polynomial form of the cubed binomial sum",
 "n=0..10", R"(
params n:nat;
sum[k=0..n] (-1)^k * binom(n, k)^3 * x^k
  == sum[k=0..n] (-1)^k * binom(n - k, k) * binom(n + k, 2 * k) * binom(2 * k, k) * x^k * (1-x)^(n - 2 * k);
)", true},
};
// clang-format on

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::kRawCatalog) {
      CatalogEntry e;
      e.id = raw.id;
      e.name = raw.name;
      e.anchor = raw.anchor;
      e.source = raw.source;
      e.grid = raw.grid;
      e.fixture = raw.fixture;
      try {
        e.desc = parse_descriptor(raw.source);
        e.default_grid = parse_grid(raw.grid);
      } catch (Error& err) {
        throw Error("catalog entry " + e.id + ": " + err.what());
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

// Lookup by id (e.g. "C03") or by name (e.g. "frisch").
// Ids are unique. A name may be shared by one entry and one fixture; the
// fixture wins a name lookup.
inline const CatalogEntry& find_entry(std::string_view key) {
  const CatalogEntry* by_name = nullptr;
  for (const auto& e : catalog()) {
    if (e.id == key) return e;
    if (e.name == key && (by_name == nullptr || e.fixture)) by_name = &e;
  }
  if (by_name == nullptr) throw UnknownEntry(std::string(key));
  return *by_name;
}

inline CheckResult verify_entry(std::string_view key, const ParamBinding& b) {
  const auto& e = find_entry(key);
  return check_two_sided(e.desc, b, e.id);
}

inline GridReport verify_grid(const CatalogEntry& e, const GridSpec& grid, unsigned threads = 0) {
  auto report = verify_bindings(e.desc, expand_grid(e.desc, grid), e.id, threads);
  report.anchor = e.anchor;
  return report;
}

inline GridReport verify_grid(const CatalogEntry& e, unsigned threads = 0) {
  return verify_grid(e, e.default_grid, threads);
}

inline GridReport verify_grid(std::string_view key, unsigned threads = 0) {
  const auto& e = find_entry(key);
  return verify_grid(e, e.default_grid, threads);
}

}  // namespace combid
