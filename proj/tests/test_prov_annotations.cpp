#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace kgq;
using namespace kgqtest;

TEST_CASE("unionProv examples") {
  Provenance p = Provenance::of({Iri{"wd:Q1"}});
  CHECK(Provenance::union_(Provenance::empty(), p) == p);
  CHECK(Provenance::union_(Provenance::of({Iri{"wd:Q1"}}), Provenance::of({Iri{"wd:Q2"}}))
            .sources() == std::set<Iri>{Iri{"wd:Q1"}, Iri{"wd:Q2"}});
}

TEST_CASE("annotation examples") {
  Annotations a;
  CHECK(a.get(Iri{"pq:P2309"}).empty());

  Value instance_of = Value::entity(Annotations::kInstanceOfSentinel);
  Annotations with_rel = a.add(Annotations::kRelationQualifier, instance_of);
  CHECK(with_rel.get_relation().count(instance_of) == 1);
  CHECK(Annotations::kInstanceOfSentinel == Iri{"wd:Q21503252"});
  CHECK(Annotations::kSubclassOfSentinel == Iri{"wd:Q21514624"});

  Value human = Value::entity(Iri{"wd:Q5"});
  Annotations with_class = a.add(Annotations::kClassQualifier, human);
  CHECK(with_class.get_class() == std::set<Value>{human});

  CHECK(a.add(Iri{"pq:P1"}, human).add(Iri{"pq:P1"}, human) ==
        a.add(Iri{"pq:P1"}, human));
}

TEST_CASE("provenance axiom group") {
  std::string why;
  int fails = check_provenance_axioms(1500, 41, &why);
  INFO(why);
  CHECK(fails == 0);
}

TEST_CASE("annotations axiom group") {
  std::string why;
  int fails = check_annotations_axioms(1500, 42, &why);
  INFO(why);
  CHECK(fails == 0);
}
