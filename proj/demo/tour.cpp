// A short walk through the library with S3.

#include <iostream>

#include "e2g/algebra.hpp"
#include "e2g/operad.hpp"
#include "e2g/relations.hpp"

using namespace e2g;

int main() {
  const auto G = make_group("S3");
  const auto res = element_resolver(G);

  // one component: two inputs colored (12), output e
  const ColorSignature sig{{res("(12)"), res("(12)")}, 0};
  const auto orbits = component_orbits(G, sig);
  std::cout << "component (12),(12) -> e: " << orbits.objects << " objects, " << orbits.orbits() << " orbits\n";
  for (std::size_t k = 0; k < orbits.orbits(); ++k)
    std::cout << "  " << orbits.representatives[k].str() << "  size " << orbits.orbit_sizes[k] << "\n";
  std::cout << "Hurwitz space, r = 3: " << pi0_hurwitz_space(G, 3) << " orbits\n";

  // a tree and its normal form
  TreeParseContext ctx;
  ctx.element = res;
  const GTree t = parse_tree("T(L[(123)](leaf:2:(12)), T(U, leaf:1:(13)))", ctx);
  const NormalForm nf = normalize(G, t);
  std::cout << "tree " << t.str(&G) << "\n  normal form " << nf.str() << ", output "
            << G.element_name(nf.signature.output) << "\n  standard tree " << denormalize(nf).str(&G) << "\n";

  // composition agrees with grafting; the inner output (13) matches slot 1
  const NormalForm inner = normalize(G, parse_tree("L[(12)](leaf:1:(23))", ctx));
  std::cout << "compose at slot 1: " << compose_normal(G, nf, 1, inner).str() << ", by grafting "
            << compose_by_graft(G, nf, 1, inner).str() << "\n";

  // the relation table against the braid model
  std::size_t instances = 0, failures = 0;
  for (const auto& rep : check_all_relations(G)) {
    instances += rep.assignments_checked;
    failures += rep.failure_count;
  }
  std::cout << "relations: " << instances << " instances, " << failures << " failures\n";

  // a braided crossed algebra built from the group itself
  const auto report = check_coherence(builtin_group_example(G));
  std::cout << "builtin coherence: " << report.instances << " instances, " << report.failure_count
            << " failures\n";
  return failures == 0 && report.ok() ? 0 : 1;
}
