#pragma once
// Generated catalog data: the curated dataset in the declarative text format,
// plus per-entry transcription checksums (homogeneous degree and term count).

#include <vector>
#include <string>

namespace stratachow::catalogdata {

struct EntryChecksum {
  const char* kind;
  const char* key;
  std::vector<int> degrees;
  std::vector<int> term_counts;
};

inline const std::vector<EntryChecksum>& entry_checksums() {
  static const std::vector<EntryChecksum> table = {
      {"ideal", "open.p012", {6, 5, 4}, {3, 4, 3}},
      {"ideal", "open.relations", {9, 6, 5, 4}, {5, 3, 4, 3}},
      {"ideal", "hyperelliptic.relations", {9, 3, 4}, {30, 3, 6}},
      {"ideal", "delta1.relations", {4}, {4}},
      {"ideal", "delta11.relations", {}, {}},
      {"ideal", "delta111.relations", {}, {}},
      {"ideal", "m3tilde.relations", {4, 3, 4, 4, 3, 5, 4, 5, 6, 4, 4, 5, 6, 4}, {14, 8, 13, 5, 3, 8, 2, 2, 2, 1, 22, 33, 47, 10}},
      {"poly", "m3tilde.r", {9}, {90}},
      {"ideal", "m3bar.relations", {2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5}, {2, 16, 6, 10, 8, 3, 23, 4, 5, 2, 1, 22, 14, 13, 8}},
      {"poly", "open.z2", {9}, {5}},
      {"poly", "hyperelliptic.c9", {9}, {30}},
      {"poly", "hyperelliptic.D1", {3}, {3}},
      {"poly", "hyperelliptic.D2", {4}, {6}},
      {"poly", "delta1.f", {4}, {4}},
      {"poly", "m3bar.A2", {2}, {2}},
      {"poly", "m3bar.A3", {3}, {16}},
      {"poly", "m3bar.A31", {3}, {6}},
      {"poly", "m3bar.A4", {4}, {23}},
      {"poly", "m3bar.d1c", {3}, {10}},
      {"poly", "m3bar.d11c", {4}, {4}},
      {"poly", "m3bar.d11c.alt", {4}, {4}},
      {"poly", "m3bar.d1c.restr.open", {0}, {0}},
      {"poly", "m3bar.d1c.restr.hyperelliptic", {0}, {0}},
      {"poly", "m3bar.d1c.restr.delta1", {3}, {2}},
      {"poly", "m3bar.d1c.restr.delta11", {3}, {4}},
      {"poly", "m3bar.d1c.restr.delta111", {3}, {3}},
      {"poly", "m3bar.A31.restr.open", {0}, {0}},
      {"poly", "m3bar.A31.restr.hyperelliptic", {3}, {3}},
      {"poly", "m3bar.A31.restr.delta1", {3}, {3}},
      {"poly", "m3bar.A31.restr.delta11", {3}, {1}},
      {"poly", "m3bar.A31.restr.delta111", {0}, {0}},
      {"poly", "m3bar.d1c.stated.delta11", {3}, {4}},
      {"poly", "m3bar.d1c.stated.delta111", {3}, {2}},
  };
  return table;
}

inline const char* catalog_text() {
  static const char* text = R"CHOWDATA(# Curated dataset: stratum presentations, restriction maps, relation
# ideals, and named classes for the genus-3 verification scenarios.

ring open.ring
  var lambda1 : 1
  var lambda2 : 2
  var lambda3 : 3

ring hyperelliptic.ring
  var lambda1 : 1
  var lambda2 : 2
  var xi1 : 1

ring delta1.ring
  var t0 : 1
  var t1 : 1
  var t : 1

ring delta11.ring
  var t : 1
  var c1 : 1
  var c2 : 2

ring delta111.ring
  var c1 : 1
  var c2 : 2
  var c3 : 3

ring stage1.ring
  var lambda1 : 1
  var lambda2 : 2
  var lambda3 : 3
  var H : 1

ring stage2.ring
  var lambda1 : 1
  var lambda2 : 2
  var lambda3 : 3
  var H : 1
  var delta1 : 1

ring stage3.ring
  var lambda1 : 1
  var lambda2 : 2
  var lambda3 : 3
  var H : 1
  var delta1 : 1
  var delta11 : 2

ring m3tilde.ring
  var lambda1 : 1
  var lambda2 : 2
  var lambda3 : 3
  var H : 1
  var delta1 : 1
  var delta11 : 2
  var delta111 : 3

ring faber.source
  var lambda1 : 1
  var H : 1
  var delta1 : 1
  var delta11 : 2

ring faber.target
  var lambda1 : 1
  var delta0 : 1
  var delta1 : 1
  var kappa2 : 2

# open stratum: the three localized relations
ideal open.p012 in open.ring
  rel 15*lambda1^3*lambda3 - 52*lambda1*lambda2*lambda3 + 112*lambda3^2
  rel -14*lambda1^3*lambda2 + 2*lambda1^2*lambda3 + 48*lambda1*lambda2^2 - 96*lambda2*lambda3
  rel 12*lambda1^4 - 44*lambda1^2*lambda2 + 92*lambda1*lambda3

# open stratum presentation ideal
ideal open.relations in open.ring
  rel -1152*lambda1^3*lambda3^2 + 256*lambda1^2*lambda2^2*lambda3 + 5824*lambda1*lambda2*lambda3^2 - 1152*lambda2^3*lambda3 - 10976*lambda3^3
  rel 15*lambda1^3*lambda3 - 52*lambda1*lambda2*lambda3 + 112*lambda3^2
  rel -14*lambda1^3*lambda2 + 2*lambda1^2*lambda3 + 48*lambda1*lambda2^2 - 96*lambda2*lambda3
  rel 12*lambda1^4 - 44*lambda1^2*lambda2 + 92*lambda1*lambda3

# hyperelliptic stratum presentation ideal
ideal hyperelliptic.relations in hyperelliptic.ring
  rel -16192/19683*lambda1^9 - 23200/6561*lambda1^8*xi1 + 1376/729*lambda1^7*lambda2 - 31040/6561*lambda1^7*xi1^2 + 4576/243*lambda1^6*lambda2*xi1 - 320/6561*lambda1^6*xi1^3 + 3968/81*lambda1^5*lambda2^2 + 10144/243*lambda1^5*lambda2*xi1^2 + 30784/6561*lambda1^5*xi1^4 + 992/27*lambda1^4*lambda2^2*xi1 + 15136/729*lambda1^4*lambda2*xi1^3 + 16256/6561*lambda1^4*xi1^5 - 7264/27*lambda1^3*lambda2^3 - 11072/81*lambda1^3*lambda2^2*xi1^2 - 5792/243*lambda1^3*lambda2*xi1^4 - 320/243*lambda1^3*xi1^6 - 2848/9*lambda1^2*lambda2^3*xi1 - 11392/81*lambda1^2*lambda2^2*xi1^3 - 5216/243*lambda1^2*lambda2*xi1^5 - 7360/6561*lambda1^2*xi1^7 + 384*lambda1*lambda2^4 + 1568/9*lambda1*lambda2^3*xi1^2 + 832/27*lambda1*lambda2^2*xi1^4 + 1952/729*lambda1*lambda2*xi1^6 + 640/6561*lambda1*xi1^8 + 384*lambda2^4*xi1 + 5984/27*lambda2^3*xi1^3 + 3808/81*lambda2^2*xi1^5 + 352/81*lambda2*xi1^7 + 2912/19683*xi1^9
  rel 8/9*lambda1^2*xi1 + 10/9*lambda1*xi1^2 + 2/9*xi1^3
  rel 2/27*lambda1^3*xi1 + 2/9*lambda1^2*xi1^2 + 2/3*lambda1*lambda2*xi1 + 2/9*lambda1*xi1^3 + 2/3*lambda2*xi1^2 + 2/27*xi1^4

# first boundary stratum ideal
ideal delta1.relations in delta1.ring
  rel 2*t0^3*t1 - 8*t0^2*t1^2 + 2*t0*t1^3 + 12*t1^4

# second boundary stratum ideal (free)
ideal delta11.relations in delta11.ring

# deepest boundary stratum ideal (free)
ideal delta111.relations in delta111.ring

# the 14 displayed relations of the stratified presentation
ideal m3tilde.relations in m3tilde.ring
  rel 1/8*lambda1^3*H + 1/8*lambda1^2*H^2 + 1/4*lambda1^2*H*delta1 - 1/2*lambda1*lambda2*H - 1/8*lambda1*H^3 + 7/8*lambda1*H*delta1^2 + 3/2*lambda1*delta1*delta11 - 1/2*lambda2*H^2 + lambda3*H - 1/8*H^4 - 1/4*H^3*delta1 + 1/8*H^2*delta1^2 + 3/4*H*delta1^3 + 3/2*delta1^2*delta11
  rel 1/4*lambda1^2*delta1 + 1/2*lambda1*H*delta1 + 2*lambda1*delta1^2 + lambda2*delta1 + 1/4*H^2*delta1 + H*delta1^2 + 7/4*delta1^3 - delta1*delta11
  rel 1/4*lambda1^3*delta1 + 1/2*lambda1^2*H*delta1 + 5/4*lambda1^2*delta1^2 + 1/4*lambda1*H^2*delta1 + 3/2*lambda1*H*delta1^2 + 7/4*lambda1*delta1^3 + lambda1*delta1*delta11 - lambda1*delta111 + lambda3*delta1 + 1/4*H^2*delta1^2 + H*delta1^3 + 3/4*delta1^4 + delta1^2*delta11
  rel -lambda1^2*delta11 - 2*lambda1*delta1*delta11 - lambda2*delta11 - delta1^2*delta11 + delta11^2
  rel 3*lambda1*delta11 + H*delta11 + 3*delta1*delta11
  rel 2*lambda1^3*delta11 + 5*lambda1^2*delta1*delta11 + lambda1*lambda2*delta11 + 4*lambda1*delta1^2*delta11 + lambda2*delta1*delta11 + lambda2*delta111 + lambda3*delta11 + delta1^3*delta11
  rel lambda1*delta111 + delta1*delta111
  rel lambda2*delta111 - delta11*delta111
  rel lambda3*delta111 + delta111^2
  rel H*delta111
  rel 12*lambda1^4 - 7/3*lambda1^3*H + 27*lambda1^3*delta1 - 44*lambda1^2*lambda2 - 706/9*lambda1^2*H^2 - 65/2*lambda1^2*H*delta1 + 84*lambda1^2*delta1^2 - 32*lambda1^2*delta11 - 38*lambda1*lambda2*H + 92*lambda1*lambda3 - 715/9*lambda1*H^3 - 1340/9*lambda1*H^2*delta1 - 25*lambda1*H*delta1^2 + 69*lambda1*delta1^3 - 130*lambda1*delta1*delta11 + 92*lambda1*delta111 + 6*lambda2*H^2 - 46/3*H^4 - 1205/18*H^3*delta1 - 562/9*H^2*delta1^2 - 101/6*H*delta1^3 - 54*delta1^2*delta11
  rel -55/18*lambda1^4*H + 9/2*lambda1^4*delta1 - 14*lambda1^3*lambda2 - 31/3*lambda1^3*H^2 - 58/9*lambda1^3*H*delta1 + 69*lambda1^3*delta1^2 - 272/3*lambda1^3*delta11 - 173/9*lambda1^2*lambda2*H + 2*lambda1^2*lambda3 - 137/18*lambda1^2*H^3 - 167/4*lambda1^2*H^2*delta1 + 1831/36*lambda1^2*H*delta1^2 + 459/2*lambda1^2*delta1^3 - 461/3*lambda1^2*delta1*delta11 + 2*lambda1^2*delta111 + 48*lambda1*lambda2^2 + 1/9*lambda1*lambda2*H^2 - 1/3*lambda1*H^4 - 605/18*lambda1*H^3*delta1 - 955/18*lambda1*H^2*delta1^2 + 139*lambda1*H*delta1^3 + 291*lambda1*delta1^4 - 49*lambda1*delta1^2*delta11 + 48*lambda2^2*H - 96*lambda2*lambda3 + 16/3*lambda2*H^3 + 48*lambda2*delta1*delta11 - 96*lambda2*delta111 - 241/36*H^4*delta1 - 1111/36*H^3*delta1^2 - 63/4*H^2*delta1^3 + 367/4*H*delta1^4 + 126*delta1^5
  rel 419/648*lambda1^5*H - 9*lambda1^5*delta1 + 17903/972*lambda1^4*H^2 - 19763/648*lambda1^4*H*delta1 - 285/4*lambda1^4*delta1^2 + 57344/27*lambda1^4*delta11 - 401/162*lambda1^3*lambda2*H + 15*lambda1^3*lambda3 + 100795/1944*lambda1^3*H^3 - 16057/972*lambda1^3*H^2*delta1 - 100555/648*lambda1^3*H*delta1^2 - 861/4*lambda1^3*delta1^3 + 614635/54*lambda1^3*delta1*delta11 + 15*lambda1^3*delta111 - 6433/81*lambda1^2*lambda2*H^2 - 32*lambda1^2*lambda2*delta11 + 11561/216*lambda1^2*H^4 + 12349/324*lambda1^2*H^3*delta1 + 559/12*lambda1^2*H^2*delta1^2 - 120883/324*lambda1^2*H*delta1^3 - 1263/4*lambda1^2*delta1^4 + 198799/9*lambda1^2*delta1^2*delta11 - 22*lambda1*lambda2^2*H - 52*lambda1*lambda2*lambda3 - 151*lambda1*lambda2*H^3 + 54*lambda1*lambda2*delta1*delta11 - 52*lambda1*lambda2*delta111 + 2845/162*lambda1*H^5 + 19415/324*lambda1*H^4*delta1 + 59303/324*lambda1*H^3*delta1^2 + 10946/243*lambda1*H^2*delta1^3 - 66367/162*lambda1*H*delta1^4 - 903/4*lambda1*delta1^5 + 18519*lambda1*delta1^3*delta11 - 22*lambda2^2*H^2 - 1333/18*lambda2*H^4 + 86*lambda2*delta1^2*delta11 + 112*lambda3^2 + 112*lambda3*delta111 - 407/216*H^6 + 14521/648*H^5*delta1 + 40205/648*H^4*delta1^2 + 147917/972*H^3*delta1^3 - 8563/243*H^2*delta1^4 - 104075/648*H*delta1^5 - 63*delta1^6 + 11377/2*delta1^4*delta11
  rel 3/4*lambda1^3*H + 13/4*lambda1^2*H^2 + 9/4*lambda1^2*H*delta1 + 13/4*lambda1*H^3 + 13/2*lambda1*H^2*delta1 + 9/4*lambda1*H*delta1^2 + 3/4*H^4 + 13/4*H^3*delta1 + 13/4*H^2*delta1^2 + 3/4*H*delta1^3

# the degree-9 relation (two damaged monomial slots repaired)
poly m3tilde.r in m3tilde.ring
  expr -7/81*lambda1^8*H + 247145/2916*lambda1^7*H^2 - 39125/81*lambda1^7*H*delta1 - 20800*lambda1^7*delta11 - 1286/243*lambda1^6*lambda2*H + 1573727/8748*lambda1^6*H^3 - 400579/162*lambda1^6*H^2*delta1 - 618187/162*lambda1^6*H*delta1^2 + 31710800/81*lambda1^6*delta1*delta11 - 736943/729*lambda1^5*lambda2*H^2 - 24288*lambda1^5*lambda2*delta11 - 2193853/8748*lambda1^5*H^4 - 4516739/729*lambda1^5*H^3*delta1 - 35110427/2916*lambda1^5*H^2*delta1^2 - 3448919/243*lambda1^5*H*delta1^3 + 253855904/81*lambda1^5*delta1^2*delta11 - 136/3*lambda1^4*lambda2^2*H - 2054561/729*lambda1^4*lambda2*H^3 + 133280*lambda1^4*lambda2*delta1*delta11 - 2986483/2916*lambda1^4*H^5 - 40469125/4374*lambda1^4*H^4*delta1 - 52534855/2916*lambda1^4*H^3*delta1^2 - 33507299/1458*lambda1^4*H^2*delta1^3 - 17079953/486*lambda1^4*H*delta1^4 + 246525952/27*lambda1^4*delta1^3*delta11 + 26584/9*lambda1^3*lambda2^2*H^2 - 9248*lambda1^3*lambda2^2*delta11 - 364370/243*lambda1^3*lambda2*H^4 + 911024*lambda1^3*lambda2*delta1^2*delta11 - 1152*lambda1^3*lambda3^2 - 1152*lambda1^3*lambda3*delta111 - 315269/324*lambda1^3*H^6 - 6063527/729*lambda1^3*H^5*delta1 - 80352425/4374*lambda1^3*H^4*delta1^2 - 8710724/2187*lambda1^3*H^3*delta1^3 - 26273782/729*lambda1^3*H^2*delta1^4 - 13515761/243*lambda1^3*H*delta1^5 + 41134658/3*lambda1^3*delta1^4*delta11 + 896*lambda1^2*lambda2^3*H + 256*lambda1^2*lambda2^2*lambda3 + 225704/27*lambda1^2*lambda2^2*H^3 - 11680*lambda1^2*lambda2^2*delta1*delta11 + 256*lambda1^2*lambda2^2*delta111 + 19484/9*lambda1^2*lambda2*H^5 + 1716232*lambda1^2*lambda2*delta1^3*delta11 - 70385/324*lambda1^2*H^7 - 716609/162*lambda1^2*H^6*delta1 - 3175405/243*lambda1^2*H^5*delta1^2 + 14917697/2187*lambda1^2*H^4*delta1^3 + 27927485/1458*lambda1^2*H^3*delta1^4 - 24157867/486*lambda1^2*H^2*delta1^5 - 12315655/243*lambda1^2*H*delta1^6 + 11373175*lambda1^2*delta1^5*delta11 + 1664*lambda1*lambda2^3*H^2 - 1152*lambda1*lambda2^3*delta11 + 192920/27*lambda1*lambda2^2*H^4 + 7328*lambda1*lambda2^2*delta1^2*delta11 + 5824*lambda1*lambda2*lambda3^2 + 5824*lambda1*lambda2*lambda3*delta111 + 66191/27*lambda1*lambda2*H^6 + 1353816*lambda1*lambda2*delta1^4*delta11 + 12985/108*lambda1*H^8 - 104593/81*lambda1*H^7*delta1 - 1752295/324*lambda1*H^6*delta1^2 + 906349/729*lambda1*H^5*delta1^3 + 57919459/2187*lambda1*H^4*delta1^4 + 6920350/729*lambda1*H^3*delta1^5 - 53724649/1458*lambda1*H^2*delta1^6 - 5743493/243*lambda1*H*delta1^7 + 4958470*lambda1*delta1^6*delta11 - 1152*lambda2^3*lambda3 + 768*lambda2^3*H^3 - 1152*lambda2^3*delta1*delta11 - 1152*lambda2^3*delta111 + 16064/9*lambda2^2*H^5 + 9760*lambda2^2*delta1^3*delta11 + 5399/9*lambda2*H^7 + 391040*lambda2*delta1^5*delta11 - 10976*lambda3^3 - 10976*lambda3^2*delta111 + 171/4*H^9 - 7903/54*H^8*delta1 - 304223/324*H^7*delta1^2 - 365225/486*H^6*delta1^3 + 4136302/729*H^5*delta1^4 + 43734445/4374*H^4*delta1^5 - 3256102/2187*H^3*delta1^6 - 14121601/1458*H^2*delta1^7 - 1042615/243*H*delta1^8 + 887989*delta1^7*delta11

# the 15 relations of the compactified presentation
ideal m3bar.relations in m3tilde.ring
  rel 24*lambda1^2 - 48*lambda2
  rel 36*lambda1^3 + 10*lambda1^2*H + 21*lambda1^2*delta1 - 92*lambda1*lambda2 - 4*lambda1*H^2 + 18*lambda1*H*delta1 + 72*lambda1*delta1^2 + 88*lambda1*delta11 - 20*lambda2*H + 56*lambda3 - 2*H^3 + 9*H^2*delta1 + 54*H*delta1^2 + 87*delta1^3 - 4*delta1*delta11 + 56*delta111
  rel 1/2*lambda1^2*H + 2*lambda1*H^2 + lambda1*H*delta1 + 3/2*H^3 + 2*H^2*delta1 + 1/2*H*delta1^2
  rel 6*lambda1^2*delta1 + 12*lambda1*H*delta1 + 36*lambda1*delta1^2 + 24*lambda1*delta11 + 6*H^2*delta1 + 36*H*delta1^2 - 24*H*delta11 + 54*delta1^3 - 48*delta1*delta11 + 72*delta111
  rel 1/4*lambda1^2*delta1 + 1/2*lambda1*H*delta1 + 2*lambda1*delta1^2 + lambda2*delta1 + 1/4*H^2*delta1 + H*delta1^2 + 7/4*delta1^3 - delta1*delta11
  rel 3*lambda1*delta11 + H*delta11 + 3*delta1*delta11
  rel 36*lambda1^4 + 1048/27*lambda1^3*H + 66*lambda1^3*delta1 - 92*lambda1^2*lambda2 - 146/81*lambda1^2*H^2 + 517/9*lambda1^2*H*delta1 + 207*lambda1^2*delta1^2 - 176*lambda1^2*delta11 - 84*lambda1*lambda2*H + 56*lambda1*lambda3 + 16/81*lambda1*H^3 + 3272/81*lambda1*H^2*delta1 + 1282/9*lambda1*H*delta1^2 + 222*lambda1*delta1^3 - 340*lambda1*delta1*delta11 + 56*lambda1*delta111 + 8*lambda2*H^2 + 130/27*H^4 + 2041/81*H^3*delta1 + 4957/81*H^2*delta1^2 + 2101/27*H*delta1^3 + 45*delta1^4 - 72*delta1^2*delta11
  rel 24*lambda1^2*delta11 + 48*lambda1*delta1*delta11 + 24*delta1^2*delta11 + 24*delta1*delta111
  rel -lambda1^2*delta11 - 2*lambda1*delta1*delta11 - lambda2*delta11 - delta1^2*delta11 + delta11^2
  rel lambda1*delta111 + delta1*delta111
  rel H*delta111
  rel 12*lambda1^4 - 7/3*lambda1^3*H + 27*lambda1^3*delta1 - 44*lambda1^2*lambda2 - 706/9*lambda1^2*H^2 - 65/2*lambda1^2*H*delta1 + 84*lambda1^2*delta1^2 - 32*lambda1^2*delta11 - 38*lambda1*lambda2*H + 92*lambda1*lambda3 - 715/9*lambda1*H^3 - 1340/9*lambda1*H^2*delta1 - 25*lambda1*H*delta1^2 + 69*lambda1*delta1^3 - 130*lambda1*delta1*delta11 + 92*lambda1*delta111 + 6*lambda2*H^2 - 46/3*H^4 - 1205/18*H^3*delta1 - 562/9*H^2*delta1^2 - 101/6*H*delta1^3 - 54*delta1^2*delta11
  rel 1/8*lambda1^3*H + 1/8*lambda1^2*H^2 + 1/4*lambda1^2*H*delta1 - 1/2*lambda1*lambda2*H - 1/8*lambda1*H^3 + 7/8*lambda1*H*delta1^2 + 3/2*lambda1*delta1*delta11 - 1/2*lambda2*H^2 + lambda3*H - 1/8*H^4 - 1/4*H^3*delta1 + 1/8*H^2*delta1^2 + 3/4*H*delta1^3 + 3/2*delta1^2*delta11
  rel 1/4*lambda1^3*delta1 + 1/2*lambda1^2*H*delta1 + 5/4*lambda1^2*delta1^2 + 1/4*lambda1*H^2*delta1 + 3/2*lambda1*H*delta1^2 + 7/4*lambda1*delta1^3 + lambda1*delta1*delta11 - lambda1*delta111 + lambda3*delta1 + 1/4*H^2*delta1^2 + H*delta1^3 + 3/4*delta1^4 + delta1^2*delta11
  rel 2*lambda1^3*delta11 + 5*lambda1^2*delta1*delta11 + lambda1*lambda2*delta11 + 4*lambda1*delta1^2*delta11 + lambda2*delta1*delta11 + lambda2*delta111 + lambda3*delta11 + delta1^3*delta11

# the relation independent of the other three
poly open.z2 in open.ring
  expr -1152*lambda1^3*lambda3^2 + 256*lambda1^2*lambda2^2*lambda3 + 5824*lambda1*lambda2*lambda3^2 - 1152*lambda2^3*lambda3 - 10976*lambda3^3

# the degree-9 hyperelliptic relation
poly hyperelliptic.c9 in hyperelliptic.ring
  expr -16192/19683*lambda1^9 - 23200/6561*lambda1^8*xi1 + 1376/729*lambda1^7*lambda2 - 31040/6561*lambda1^7*xi1^2 + 4576/243*lambda1^6*lambda2*xi1 - 320/6561*lambda1^6*xi1^3 + 3968/81*lambda1^5*lambda2^2 + 10144/243*lambda1^5*lambda2*xi1^2 + 30784/6561*lambda1^5*xi1^4 + 992/27*lambda1^4*lambda2^2*xi1 + 15136/729*lambda1^4*lambda2*xi1^3 + 16256/6561*lambda1^4*xi1^5 - 7264/27*lambda1^3*lambda2^3 - 11072/81*lambda1^3*lambda2^2*xi1^2 - 5792/243*lambda1^3*lambda2*xi1^4 - 320/243*lambda1^3*xi1^6 - 2848/9*lambda1^2*lambda2^3*xi1 - 11392/81*lambda1^2*lambda2^2*xi1^3 - 5216/243*lambda1^2*lambda2*xi1^5 - 7360/6561*lambda1^2*xi1^7 + 384*lambda1*lambda2^4 + 1568/9*lambda1*lambda2^3*xi1^2 + 832/27*lambda1*lambda2^2*xi1^4 + 1952/729*lambda1*lambda2*xi1^6 + 640/6561*lambda1*xi1^8 + 384*lambda2^4*xi1 + 5984/27*lambda2^3*xi1^3 + 3808/81*lambda2^2*xi1^5 + 352/81*lambda2*xi1^7 + 2912/19683*xi1^9

# first divisorial class
poly hyperelliptic.D1 in hyperelliptic.ring
  expr 8/9*lambda1^2*xi1 + 10/9*lambda1*xi1^2 + 2/9*xi1^3

# second divisorial class
poly hyperelliptic.D2 in hyperelliptic.ring
  expr 2/27*lambda1^3*xi1 + 2/9*lambda1^2*xi1^2 + 2/3*lambda1*lambda2*xi1 + 2/9*lambda1*xi1^3 + 2/3*lambda2*xi1^2 + 2/27*xi1^4

# quartic relation of the first boundary stratum
poly delta1.f in delta1.ring
  expr 2*t0^3*t1 - 8*t0^2*t1^2 + 2*t0*t1^3 + 12*t1^4

# cusp class
poly m3bar.A2 in m3tilde.ring
  expr 24*lambda1^2 - 48*lambda2

# tacnode class
poly m3bar.A3 in m3tilde.ring
  expr 36*lambda1^3 + 10*lambda1^2*H + 21*lambda1^2*delta1 - 92*lambda1*lambda2 - 4*lambda1*H^2 + 18*lambda1*H*delta1 + 72*lambda1*delta1^2 + 88*lambda1*delta11 - 20*lambda2*H + 56*lambda3 - 2*H^3 + 9*H^2*delta1 + 54*H*delta1^2 + 87*delta1^3 - 4*delta1*delta11 + 56*delta111

# separating tacnode class
poly m3bar.A31 in m3tilde.ring
  expr 1/2*lambda1^2*H + 2*lambda1*H^2 + lambda1*H*delta1 + 3/2*H^3 + 2*H^2*delta1 + 1/2*H*delta1^2

# higher singularity class
poly m3bar.A4 in m3tilde.ring
  expr 36*lambda1^4 + 1048/27*lambda1^3*H + 66*lambda1^3*delta1 - 92*lambda1^2*lambda2 - 146/81*lambda1^2*H^2 + 517/9*lambda1^2*H*delta1 + 207*lambda1^2*delta1^2 - 176*lambda1^2*delta11 - 84*lambda1*lambda2*H + 56*lambda1*lambda3 + 16/81*lambda1*H^3 + 3272/81*lambda1*H^2*delta1 + 1282/9*lambda1*H*delta1^2 + 222*lambda1*delta1^3 - 340*lambda1*delta1*delta11 + 56*lambda1*delta111 + 8*lambda2*H^2 + 130/27*H^4 + 2041/81*H^3*delta1 + 4957/81*H^2*delta1^2 + 2101/27*H*delta1^3 + 45*delta1^4 - 72*delta1^2*delta11

# pinched first boundary class
poly m3bar.d1c in m3tilde.ring
  expr 6*lambda1^2*delta1 + 12*lambda1*H*delta1 + 36*lambda1*delta1^2 + 24*lambda1*delta11 + 6*H^2*delta1 + 36*H*delta1^2 - 24*H*delta11 + 54*delta1^3 - 48*delta1*delta11 + 72*delta111

# pinched second boundary class
poly m3bar.d11c in m3tilde.ring
  expr 24*lambda1^2*delta11 + 48*lambda1*delta1*delta11 + 24*delta1^2*delta11 + 24*delta1*delta111

# pinched second boundary class, alternative display
poly m3bar.d11c.alt in m3tilde.ring
  expr 24*lambda1^2*delta11 + 48*lambda1*delta1*delta11 + 24*delta1^2*delta11 + 24*delta1*delta111

# computed restriction of d1c to the open stratum
poly m3bar.d1c.restr.open in open.ring
  expr 0

# computed restriction of d1c to the hyperelliptic stratum
poly m3bar.d1c.restr.hyperelliptic in hyperelliptic.ring
  expr 0

# computed restriction of d1c to the delta1 stratum
poly m3bar.d1c.restr.delta1 in delta1.ring
  expr 24*t1*t^2 + 24*t^3

# computed restriction of d1c to the delta11 stratum
poly m3bar.d1c.restr.delta11 in delta11.ring
  expr 24*t*c1^2 - 48*t*c2 + 24*c1^3 - 72*c1*c2

# computed restriction of d1c to the delta111 stratum
poly m3bar.d1c.restr.delta111 in delta111.ring
  expr 24*c1^3 - 72*c1*c2 + 72*c3

# computed restriction of A31 to the open stratum
poly m3bar.A31.restr.open in open.ring
  expr 0

# computed restriction of A31 to the hyperelliptic stratum
poly m3bar.A31.restr.hyperelliptic in hyperelliptic.ring
  expr -2/9*lambda1^2*xi1 + 2/9*lambda1*xi1^2 + 4/9*xi1^3

# computed restriction of A31 to the delta1 stratum
poly m3bar.A31.restr.delta1 in delta1.ring
  expr -2*t0^2*t1 + 10*t0*t1^2 - 12*t1^3

# computed restriction of A31 to the delta11 stratum
poly m3bar.A31.restr.delta11 in delta11.ring
  expr -24*t^3

# computed restriction of A31 to the delta111 stratum
poly m3bar.A31.restr.delta111 in delta111.ring
  expr 0

# published display of the d1c restriction (conflicts with the computed value)
poly m3bar.d1c.stated.delta11 in delta11.ring
  expr 24*t^2*c1 - 48*t*c2 + 24*c1^3 - 72*c1*c2

# published display of the d1c restriction (conflicts with the computed value)
poly m3bar.d1c.stated.delta111 in delta111.ring
  expr 24*c1*c2 - 72*c3

# restriction onto the open stratum
map restrict.open from m3tilde.ring to open.ring
  send lambda1 -> lambda1
  send lambda2 -> lambda2
  send lambda3 -> lambda3
  send H -> 0
  send delta1 -> 0
  send delta11 -> 0
  send delta111 -> 0

# restriction onto the hyperelliptic stratum
map restrict.hyperelliptic from m3tilde.ring to hyperelliptic.ring
  send lambda1 -> lambda1
  send lambda2 -> lambda2
  send lambda3 -> -2/27*lambda1^3 - 1/9*lambda1^2*xi1 + 1/3*lambda1*lambda2 + 1/3*lambda2*xi1 + 1/27*xi1^3
  send H -> -1/3*lambda1 + 2/3*xi1
  send delta1 -> 0
  send delta11 -> 0
  send delta111 -> 0

# restriction onto the delta1 stratum
map restrict.delta1 from m3tilde.ring to delta1.ring
  send lambda1 -> -t0 - t1 - t
  send lambda2 -> t0*t1 + t0*t + t1*t
  send lambda3 -> -t0*t1*t
  send H -> t0 - 2*t1
  send delta1 -> t1 + t
  send delta11 -> 0
  send delta111 -> 0

# restriction onto the delta11 stratum
map restrict.delta11 from m3tilde.ring to delta11.ring
  send lambda1 -> -t - c1
  send lambda2 -> t*c1 + c2
  send lambda3 -> -t*c2
  send H -> -3*t
  send delta1 -> 2*t + c1
  send delta11 -> t^2 + t*c1 + c2
  send delta111 -> 0

# restriction onto the delta111 stratum
map restrict.delta111 from m3tilde.ring to delta111.ring
  send lambda1 -> -c1
  send lambda2 -> c2
  send lambda3 -> -c3
  send H -> 0
  send delta1 -> c1
  send delta11 -> c2
  send delta111 -> c3

# first gluing stage pullback
map stage1.pullback from stage1.ring to hyperelliptic.ring
  send lambda1 -> lambda1
  send lambda2 -> lambda2
  send lambda3 -> -2/27*lambda1^3 - 1/9*lambda1^2*xi1 + 1/3*lambda1*lambda2 + 1/3*lambda2*xi1 + 1/27*xi1^3
  send H -> -1/3*lambda1 + 2/3*xi1

# second gluing stage pullback
map stage2.pullback from stage2.ring to delta1.ring
  send lambda1 -> -t0 - t1 - t
  send lambda2 -> t0*t1 + t0*t + t1*t
  send lambda3 -> -t0*t1*t
  send H -> t0 - 2*t1
  send delta1 -> t1 + t

# third gluing stage pullback
map stage3.pullback from stage3.ring to delta11.ring
  send lambda1 -> -t - c1
  send lambda2 -> t*c1 + c2
  send lambda3 -> -t*c2
  send H -> -3*t
  send delta1 -> 2*t + c1
  send delta11 -> t^2 + t*c1 + c2

# fourth gluing stage pullback
map stage4.pullback from m3tilde.ring to delta111.ring
  send lambda1 -> -c1
  send lambda2 -> c2
  send lambda3 -> -c3
  send H -> 0
  send delta1 -> c1
  send delta11 -> c2
  send delta111 -> c3

# change of generators onto the classical basis
map faber.forward from faber.source to faber.target
  send lambda1 -> lambda1
  send H -> 9*lambda1 - delta0 - 3*delta1
  send delta1 -> delta1
  send delta11 -> -5*lambda1^2 + 1/2*lambda1*delta0 + lambda1*delta1 + 1/2*delta1^2 + 1/2*kappa2

# inverse change of generators
map faber.backward from faber.target to faber.source
  send lambda1 -> lambda1
  send delta0 -> 9*lambda1 - H - 3*delta1
  send delta1 -> delta1
  send kappa2 -> lambda1^2 + lambda1*H + lambda1*delta1 - delta1^2 + 2*delta11

stratum open
  ring open.ring
  ideal open.relations
  restrict restrict.open

stratum hyperelliptic
  ring hyperelliptic.ring
  ideal hyperelliptic.relations
  restrict restrict.hyperelliptic
  class H
  ctop -1/3*lambda1 + 2/3*xi1

stratum delta1
  ring delta1.ring
  ideal delta1.relations
  restrict restrict.delta1
  class delta1
  ctop t1 + t

stratum delta11
  ring delta11.ring
  ideal delta11.relations
  restrict restrict.delta11
  class delta11
  ctop t^2 + t*c1 + c2

stratum delta111
  ring delta111.ring
  ideal delta111.relations
  restrict restrict.delta111
  class delta111
  ctop c3

stratification m3tilde.stratification
  ambient m3tilde.ring
  ideal m3tilde.relations
  stratum open
  stratum hyperelliptic
  stratum delta1
  stratum delta11
  stratum delta111

glue stage1
  open open
  closed hyperelliptic
  class H
  pullback stage1.pullback
  ctop -1/3*lambda1 + 2/3*xi1

glue stage2
  open stage1
  closed delta1
  class delta1
  pullback stage2.pullback
  ctop t1 + t

glue stage3
  open stage2
  closed delta11
  class delta11
  pullback stage3.pullback
  ctop t^2 + t*c1 + c2

glue stage4
  open stage3
  closed delta111
  class delta111
  pullback stage4.pullback
  ctop c3
)CHOWDATA";
  return text;
}

}  // namespace stratachow::catalogdata
