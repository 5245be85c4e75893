#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace kgq;
using namespace kgqtest;

TEST_CASE("the Obama sequence node") {
  SequenceNode n = SequenceNode::seq(Iri{"wd:Q207"}, Iri{"wd:Q22686"}, 44);
  CHECK(n.has_previous());
  CHECK(*n.previous() == Iri{"wd:Q207"});
  CHECK(*n.next() == Iri{"wd:Q22686"});
  CHECK(n.ordinal() == 44);
}

TEST_CASE("constructor and accessor matrix") {
  Iri a{"wd:Q1"}, b{"wd:Q2"};

  SequenceNode empty = SequenceNode::empty();
  CHECK_FALSE(empty.has_previous());
  CHECK_FALSE(empty.has_next());
  CHECK_FALSE(empty.has_ordinal());
  CHECK(empty.is_empty());

  SequenceNode s = SequenceNode::seq(a, b);
  CHECK(*s.previous() == a);
  CHECK(*s.next() == b);
  CHECK_FALSE(s.has_ordinal());

  SequenceNode wn = SequenceNode::with_next(a);
  CHECK(*wn.next() == a);
  // previous(seqWithNext(x)) reads as undefined: no pointer present.
  CHECK_FALSE(wn.has_previous());
  CHECK(wn.previous() == nullptr);

  SequenceNode wp = SequenceNode::with_previous(a);
  CHECK(*wp.previous() == a);
  CHECK_FALSE(wp.has_next());
  CHECK(wp.next() == nullptr);

  SequenceNode wo = SequenceNode::with_ordinal(7);
  CHECK(wo.ordinal() == 7);
  CHECK_FALSE(wo.has_previous());
  CHECK_FALSE(wo.has_next());
}

TEST_CASE("ordinal of an ordinal-less node is a domain error") {
  CHECK_THROWS_AS(SequenceNode::empty().ordinal(), std::domain_error);
  CHECK_THROWS_AS(SequenceNode::seq(Iri{"wd:Q1"}, Iri{"wd:Q2"}).ordinal(),
                  std::domain_error);
}

TEST_CASE("sequence axiom group") {
  std::string why;
  int fails = check_sequence_axioms(1500, 31, &why);
  INFO(why);
  CHECK(fails == 0);
}

TEST_CASE("canonical JSON keeps all three fields") {
  Rng r(32);
  for (int i = 0; i < 1000; ++i) {
    SequenceNode n = rnd_sequence(r);
    CHECK(decode_sequence(encode_sequence(n)) == n);
  }
}
