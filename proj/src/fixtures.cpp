// Copyright 2026 The cgame Authors
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

#include <algorithm>
#include <map>
#include <sstream>

#include "cgame/fixtures.hpp"

namespace cgame {

namespace {

// Games of the running example: B answers each of up to three questions
// with one of two answers, C is a bounded supply of outcomes.
const char* kEx1Games = R"(GAME one = empty
GAME qa
  event q - q
  event a + a
  causal q a
END
GAME B = bang_ho(qa, [3, 2])
GAME ok = single(-, ok)
GAME C = dual(bang_ajm(ok, 4))
CONFIG xb = B : q(0) a(0,0) q(1) a(1,1)
CONFIG xb_prime = B : q(0) a(0,0) q(1) a(1,0)
)";

// sigma answers question i with f(i) or, in conflict, 1 - f(i).
std::string ex1_sigma(const std::string& name, const int (&f)[3]) {
  std::ostringstream os;
  os << "STRATEGY " << name << " : one -> B\n";
  for (int i = 0; i < 3; ++i) {
    os << "  event q" << i << " q B:q(" << i << ")\n";
    os << "  event f" << i << " f B:a(" << i << ',' << f[i] << ")\n";
    os << "  event g" << i << " g B:a(" << i << ',' << 1 - f[i] << ")\n";
  }
  for (int i = 0; i < 3; ++i) {
    os << "  causal q" << i << " f" << i << "\n  causal q" << i << " g" << i << '\n';
    os << "  conflict f" << i << " g" << i << '\n';
  }
  os << "END\n";
  return os.str();
}

// tau asks question 0, then for each answer i asks question h(i) and maps
// each answer j to outcome k(i, j).
std::string ex1_tau(const std::string& name, const int (&h)[2], const int (&k)[2][2]) {
  std::ostringstream os;
  os << "STRATEGY " << name << " : B -> C\n";
  os << "  event p0 init A:q(0)\n";
  for (int i = 0; i < 2; ++i) {
    os << "  event c" << i << " call A:a(0," << i << ")\n";
    os << "  event h" << i << " h A:q(" << h[i] << ")\n";
    for (int j = 0; j < 2; ++j) {
      os << "  event r" << i << j << " ret A:a(" << h[i] << ',' << j << ")\n";
      os << "  event ok" << k[i][j] << " ok B:ok[" << k[i][j] << "]\n";
    }
  }
  for (int i = 0; i < 2; ++i) {
    os << "  causal p0 c" << i << "\n  causal c" << i << " h" << i << '\n';
    for (int j = 0; j < 2; ++j) {
      os << "  causal h" << i << " r" << i << j << '\n';
      os << "  causal r" << i << j << " ok" << k[i][j] << '\n';
    }
  }
  os << "END\n";
  return os.str();
}

std::string ex1_text() {
  const int f1[3] = {0, 1, 0}, f2[3] = {1, 0, 1};
  const int h1[2] = {1, 2}, h2[2] = {2, 1};
  const int k1[2][2] = {{0, 1}, {2, 3}}, k2[2][2] = {{3, 2}, {1, 0}};
  std::string s = "# Running example, two instantiations of the tables.\n";
  s += kEx1Games;
  s += ex1_sigma("sigma", f1) + ex1_tau("tau", h1, k1);
  s += ex1_sigma("sigma2", f2) + ex1_tau("tau2", h2, k2);
  s += R"(CONFIG sync_s = sigma : q0 f0 q1 g1
CONFIG sync_t = tau : p0 c0 h0 r00 ok0
RUN validate sigma
RUN validate tau
RUN compose sigma tau
RUN check-theorem sigma tau
RUN check-theorem sigma2 tau2
)";
  return s;
}

std::string repr_text() {
  const int f1[3] = {0, 1, 0};
  const int h1[2] = {1, 2};
  const int k1[2][2] = {{0, 1}, {2, 3}};
  std::string s = "# Representatives with different numbers of witnesses.\n";
  s += kEx1Games;
  s += ex1_sigma("sigma", f1) + ex1_tau("tau", h1, k1);
  s += R"(RUN canonical B xb
RUN canonical B xb_prime
RUN check-theorem sigma tau
RUN check-theorem sigma tau B=xb
)";
  return s;
}

const char* kNonRepresentable = R"(# Two negative moves below two positive ones, polarised symmetries
# swapping the positive pair on the one hand and every pair on the other.
GAME dv
  event m1 - m
  event m2 - m
  event p1 + p
  event p2 + p
  causal m1 p1
  causal m2 p1
  causal m1 p2
  causal m2 p2
  symmetry full all
  symmetry pos generators
  generator pos m1 m2 p1 p2
  generator pos m1 m2 p2 p1
  symmetry neg generators
  generator neg m1 m2 p1 p2
  generator neg m2 m1 p2 p1
END
CONFIG top = dv : m1 m2 p1
RUN validate dv
RUN classes dv
RUN canonical dv top
)";

const char* kEpi1 = R"(# Symmetry classes of witnesses miscount the composite.
GAME A = single(-, ok)
GAME C = single(+, ok)
GAME B
  event m1 - m
  event m2 - m
  event p + p
  symmetry full all
  symmetry neg all
END
STRATEGY sigma : A -> B
  event m1 m B:m1
  event m2 m B:m2
  event ok ok A:ok
  event pa p B:p
  event pb p B:p
  causal m1 ok
  causal m2 ok
  causal m1 pa
  causal m2 pb
  conflict pa pb
END
STRATEGY tau : B -> C
  event x1 x1 A:m1
  event x2 x2 A:m2
  event y y A:p
  event ok ok B:ok
  causal y ok
END
RUN validate sigma
RUN validate tau
RUN compose sigma tau
RUN wit sigma tau
RUN check-theorem sigma tau
)";

const char* kEpi2 = R"(# The same phenomenon with exponentials, two copies.
GAME o = single(-, q)
GAME bo = bang_ajm(o, 2)
GAME boo = arrow(bo, o)
GAME B = arrow(boo, boo)
STRATEGY sigma : bo -> B
  event r r B:R.q
  event m m B:L.q
  event n0 n B:L.q[0]
  event n1 n B:L.q[1]
  event a0 a A:q[0]
  event a1 a A:q[1]
  event b0 b B:R.q[0]
  event b1 b B:R.q[1]
  causal r m
  causal m n0
  causal m n1
  causal n0 a0
  causal n0 b0
  causal n1 a1
  causal n1 b1
END
STRATEGY tau : B -> boo
  event c c B:q
  event t t A:R.q
  event u u A:L.q
  event x0 x0 A:L.q[0]
  event x1 x1 A:L.q[1]
  event w0 w A:R.q[0]
  event w1 w A:R.q[1]
  event z0 z B:q[0]
  event z1 z B:q[1]
  causal c t
  causal t u
  causal t w0
  causal t w1
  causal u x0
  causal u x1
  causal w0 z0
  causal w1 z1
END
RUN validate sigma
RUN validate tau
RUN compose sigma tau
RUN wit sigma tau
RUN check-theorem sigma tau
)";

const char* kCopycat = R"(# Copycat on a few representable games.
GAME qa
  event q - q
  event a + a
  causal q a
END
GAME o = single(-, q)
GAME bo = bang_ajm(o, 2)
GAME boo = arrow(bo, o)
GAME ho = bang_ho(qa, 2)
STRATEGY cc_qa = copycat(qa)
STRATEGY cc_bo = copycat(bo)
STRATEGY cc_boo = copycat(boo)
STRATEGY cc_ho = copycat(ho)
RUN validate cc_bo
RUN compose cc_bo cc_bo
RUN check-theorem cc_boo cc_boo
RUN check-theorem cc_qa cc_qa
)";

const char* kDeadlock = R"(# Each side waits for the other.
GAME one = empty
GAME B
  event d1 - d1
  event d2 + d2
END
STRATEGY sigma : one -> B
  event s1 m B:d1
  event s2 p B:d2
  causal s1 s2
END
STRATEGY tau : B -> one
  event t2 m A:d2
  event t1 p A:d1
  causal t2 t1
END
RUN validate sigma
RUN validate tau
RUN deadlock sigma tau
)";

const char* kAltsym = R"(# A strategy admitting two strategy symmetries.
GAME one = empty
GAME G
  event m1 - m
  event m2 - m
  event u + r
  event v + r
  causal m1 u
  causal m2 u
  causal m1 v
  causal m2 v
  conflict u v
  symmetry full all
  symmetry pos generators
  generator pos m1 m2 u v
  generator pos m1 m2 v u
  symmetry neg generators
  generator neg m1 m2 u v
  generator neg m2 m1 u v
END
STRATEGY fix : one -> G
  event s1 m B:m1
  event s2 m B:m2
  event a r B:u
  event b r B:v
  causal s1 a
  causal s2 a
  causal s1 b
  causal s2 b
  conflict a b
  symmetry generators
  generator s1 s2 a b
  generator s2 s1 a b
END
STRATEGY cross : one -> G
  event s1 m B:m1
  event s2 m B:m2
  event a r B:u
  event b r B:v
  causal s1 a
  causal s2 a
  causal s1 b
  causal s2 b
  conflict a b
  symmetry generators
  generator s1 s2 a b
  generator s2 s1 b a
END
STRATEGY cc = copycat(G)
RUN validate fix
RUN validate cross
RUN collapse fix
RUN collapse cross
RUN check-theorem fix cc
RUN check-theorem cross cc
)";

const std::map<std::string, std::string>& texts() {
  static const std::map<std::string, std::string> t = {
      {"FIX_EX1", ex1_text()},   {"FIX_REPR", repr_text()},   {"FIX_DEVISME", kNonRepresentable},
      {"FIX_EPI1", kEpi1},       {"FIX_EPI2", kEpi2},         {"FIX_COPYCAT", kCopycat},
      {"FIX_DEADLOCK", kDeadlock}, {"FIX_ALTSYM", kAltsym},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "FIX_EX1", "FIX_REPR", "FIX_DEVISME", "FIX_EPI1",
      "FIX_EPI2", "FIX_COPYCAT", "FIX_DEADLOCK", "FIX_ALTSYM"};
  return names;
}

bool is_fixture(const std::string& name) { return texts().count(name) != 0; }

const std::string& fixture_text(const std::string& name) {
  auto it = texts().find(name);
  if (it == texts().end()) throw Error(ErrorCode::InvalidArgument, "unknown fixture " + name);
  return it->second;
}

Scenario fixture(const std::string& name) { return parse_scenario(fixture_text(name)); }

}  // namespace cgame
