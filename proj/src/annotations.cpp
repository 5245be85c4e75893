#include "kgq/annotations.hpp"

namespace kgq {

const Iri Annotations::kRelationQualifier{"pq:P2309"};
const Iri Annotations::kClassQualifier{"pq:P2308"};
const Iri Annotations::kInstanceOfSentinel{"wd:Q21503252"};
const Iri Annotations::kSubclassOfSentinel{"wd:Q21514624"};

}  // namespace kgq
