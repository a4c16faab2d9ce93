#include "clique_spectra/bounds.hpp"
#include "clique_spectra/error.hpp"

namespace clique_spectra {

std::string_view to_string(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::MultipartiteOmegaEqT:
      return "multipartite-omega-eq-t";
    case EqualityKind::RegularMultipartite:
      return "regular-multipartite";
    case EqualityKind::None:
      break;
  }
  return "none";
}

EqualityCase equality_case_predicate(const Graph& g, int t) {
  if (t < 2) throw ValidationError("equality_case_predicate requires t >= 2");
  const Graph core = t_clique_core(g, t);
  EqualityCase result;
  result.omega = max_clique(core);
  if (result.omega < t) return result;

  result.structure = complete_multipartite_partition(core);
  if (!result.structure) return result;
  const auto& partition = result.structure->partition;
  const int parts = static_cast<int>(partition.parts.size());
  if (parts != result.omega) return result;
  if (partition.regular())
    result.kind = EqualityKind::RegularMultipartite;
  else if (result.omega == t)
    result.kind = EqualityKind::MultipartiteOmegaEqT;
  return result;
}

}  // namespace clique_spectra
