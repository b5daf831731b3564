#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adlv/strata.hpp"
#include "helpers.hpp"

using namespace adlv;
using namespace testing_support;

TEST_CASE("index sets of the level") {
  // identity element, trivial twist: everything in K is stable
  {
    CoxeterDatum d = datum("A3:id:mu=[0,1,0]:K={1,2}");
    CHECK(i_set_general(d.weyl().identity(), d) == d.k_set());
  }
  // the exchanged-ends datum has empty index sets throughout
  {
    CoxeterDatum d = datum("C2:id:mu=[0,1]:K={0}");
    AdmissibleSets sets(d);
    for (const WeylElement& w : sets.k_adm_0()) CHECK(i_set_general(w, d).empty());
  }
  // empty level gives empty index sets
  {
    CoxeterDatum d = datum("A3:rho3:mu=[1,0,0]:K={}");
    AdmissibleSets sets(d);
    for (const WeylElement& w : sets.k_cox()) {
      CHECK(i_set_general(w, d).empty());
      CHECK(i_set_coxeter(w, d).empty());
    }
  }
}

TEST_CASE("the two index-set descriptions agree on twisted Coxeter elements") {
  for (const char* text :
       {"C2:id:mu=[0,1]:K={0}", "C2:Ad(tau2):mu=[0,1]:K={0,2}",
        "A3:id:mu=[0,1,0]:K={1,2}", "B3:id:mu=[1,0,0]:K={1,2}",
        "B3:Ad(tau1):mu=[1,0,0]:K={0,1,2}", "C3:id:mu=[1,0,0]:K={1,2}",
        "A4:sigma0:mu=[1,0,0,0]:K={1,2,3,4}", "D4:id:mu=[1,0,0,0]:K={1,2,3}"}) {
    CoxeterDatum d = datum(text);
    AdmissibleSets sets(d);
    for (const WeylElement& w : sets.k_cox())
      CHECK(i_set_general(w, d) == i_set_coxeter(w, d));
  }
  // a nontrivial index set: the point stratum keeps exactly the twist
  // orbits inside K, and node 1's orbit {0,1} leaves K
  {
    CoxeterDatum d = datum("B3:id:mu=[1,0,0]:K={1,2}");
    NodeSet expected;
    expected.add(2);
    CHECK(i_set_general(d.tau(), d) == expected);
  }
}

TEST_CASE("a stratum with swapped rank-one factors in its residual diagram") {
  CoxeterDatum d = datum("C2:id:mu=[0,1]:K={0}");
  StrataPoset poset = strata_poset(d);
  CHECK(poset.coxeter_type);
  REQUIRE(poset.strata.size() == 3);
  Weyl& wy = d.weyl();
  const StratumDescriptor* swapped = nullptr;
  for (const auto& s : poset.strata)
    if (s.support.size() == 2) swapped = &s;
  REQUIRE(swapped != nullptr);
  CHECK(swapped->residual.size() == 2);
  CHECK(swapped->residual[0].type_name == "A1");
  CHECK(swapped->residual[1].type_name == "A1");
  // the residual Frobenius exchanges the two factors
  auto supp_nodes = swapped->support.nodes();
  CHECK(supp_nodes == std::vector<int>{0, 2});
  CHECK(swapped->residual_frobenius == std::vector<int>{2, 0});
  CHECK(swapped->dimension == 1);
  CHECK(swapped->dl_element == wy.multiply(swapped->w, wy.inverse(d.tau())));
}

TEST_CASE("closure order on the exchanged-ends datum") {
  CoxeterDatum d = datum("C2:id:mu=[0,1]:K={0}");
  Weyl& wy = d.weyl();
  WeylElement tau = d.tau();
  WeylElement s1tau = word(wy, {1}, tau), s2tau = word(wy, {2}, tau);
  CHECK(closure_leq(tau, tau, d));
  CHECK(closure_leq(tau, s1tau, d));
  CHECK(closure_leq(tau, s2tau, d));
  CHECK(!closure_leq(s1tau, s2tau, d));
  CHECK(!closure_leq(s2tau, s1tau, d));
  CHECK(!closure_leq(s1tau, tau, d));
}

TEST_CASE("all four orders coincide on levels of Coxeter type") {
  for (const char* text :
       {"C2:id:mu=[0,1]:K={0}", "C2:Ad(tau2):mu=[0,1]:K={0,2}",
        "A3:id:mu=[0,1,0]:K={1,2}", "B3:id:mu=[1,0,0]:K={1,2}",
        "A2:id:mu=[1,1]:K={1,2}", "A3:sigma0:mu=[0,1,0]:K={1,2,3}"}) {
    CoxeterDatum d = datum(text);
    Weyl& wy = d.weyl();
    AdmissibleSets sets(d);
    const auto& level = sets.k_adm_0();
    WeylElement tau_inv = wy.inverse(d.tau());
    for (const auto& a : level)
      for (const auto& b : level) {
        bool bruhat = wy.bruhat_leq(a, b);
        bool closure = closure_leq(a, b, d);
        NodeSet plain_a, plain_b;
        for (int s : wy.reduced_word(wy.multiply(a, tau_inv)).letters) plain_a.add(s);
        for (int s : wy.reduced_word(wy.multiply(b, tau_inv)).letters) plain_b.add(s);
        bool plain = plain_a.subset_of(plain_b);
        bool twisted = sets.support(a).subset_of(sets.support(b));
        CHECK(bruhat == closure);
        CHECK(closure == plain);
        CHECK(plain == twisted);
      }
    // distinct twisted Coxeter elements have distinct supports
    for (size_t i = 0; i < level.size(); ++i)
      for (size_t j = i + 1; j < level.size(); ++j)
        CHECK(sets.support(level[i]) != sets.support(level[j]));
  }
}

TEST_CASE("support recovery from the parahoric type") {
  // empty level: the union is the twist-stable support itself
  {
    CoxeterDatum d = datum("A3:rho3:mu=[1,0,0]:K={}");
    AdmissibleSets sets(d);
    for (const WeylElement& w : sets.k_cox()) {
      NodeSet supp = sets.support(w);
      CHECK(recover_support(supp, d.k_set(), d.rd(), d.ad_tau_sigma()) == supp);
    }
  }
  // components inside K are dropped
  {
    CoxeterDatum d = datum("B3:id:mu=[1,0,0]:K={1,2}");
    NodeSet u = d.k_set();  // {1,2} sits inside K entirely
    CHECK(recover_support(u, d.k_set(), d.rd(), d.ad_tau_sigma()).empty());
  }
  // round trip across levels of Coxeter type
  for (const char* text :
       {"C2:id:mu=[0,1]:K={0}", "B3:id:mu=[1,0,0]:K={1,2}",
        "B3:Ad(tau1):mu=[1,0,0]:K={0,1,2}", "A3:sigma0:mu=[0,1,0]:K={1,2,3}"}) {
    CoxeterDatum d = datum(text);
    AdmissibleSets sets(d);
    for (const WeylElement& w : sets.k_cox()) {
      NodeSet supp = sets.support(w);
      NodeSet u = supp.unite(i_set_general(w, d));
      CHECK(recover_support(u, d.k_set(), d.rd(), d.ad_tau_sigma()) == supp);
    }
  }
}

TEST_CASE("poset structure") {
  // a single point stratum
  {
    StrataPoset poset = strata_poset(datum("A3:id:mu=[1,0,0]:K={}"));
    CHECK(poset.strata.size() == 1);
    CHECK(poset.hasse.empty());
    CHECK(poset.strata[0].dimension == 0);
  }
  // the odd orthogonal grid: covers follow support inclusion
  {
    CoxeterDatum d = datum("B3:id:mu=[1,0,0]:K={1,2}");
    StrataPoset poset = strata_poset(d);
    CHECK(poset.coxeter_type);
    CHECK(poset.strata.size() == 6);
    for (const auto& [below, above] : poset.hasse) {
      CHECK(poset.strata[below].support.subset_of(poset.strata[above].support));
      CHECK(poset.strata[below].dimension < poset.strata[above].dimension);
    }
    // index sets are twist-stable and the parahoric types are finite
    for (const auto& s : poset.strata) {
      CHECK(d.ad_tau_sigma().apply(s.i_set) == s.i_set);
      CHECK(d.rd().spans_finite(s.parahoric_type));
      CHECK(s.i_set.intersect(s.support).empty());
    }
    // distinct strata carry distinct parahoric types
    for (size_t i = 0; i < poset.strata.size(); ++i)
      for (size_t j = i + 1; j < poset.strata.size(); ++j)
        CHECK(poset.strata[i].parahoric_type != poset.strata[j].parahoric_type);
  }
  // DOT output is well formed
  {
    CoxeterDatum d = datum("C2:id:mu=[0,1]:K={0}");
    StrataPoset poset = strata_poset(d);
    std::string dotsrc = poset_dot(poset, d);
    CHECK(dotsrc.find("digraph") != std::string::npos);
    CHECK(dotsrc.find("n0 ->") != std::string::npos);
  }
}
