#pragma once

#include "orbicat/constructions.hpp"
#include "orbicat/groupoid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbicat {

enum class Verdict { Yes, No, Unknown };
const char* verdictName(Verdict v);

struct EssentialCheck {
  bool holds = false;
  std::string obstruction;  // empty when holds
};

/// (i) every codomain object is reached from the image, (ii) each hom-set map
/// is a bijection.
EssentialCheck isEssentialEquivalence(const Functor& f);

struct StrongEquivalence {
  bool holds = false;
  std::optional<Functor> quasiInverse;
  std::optional<NaturalTransformation> unit;    // id ⇒ F∘ψ on the codomain
  std::optional<NaturalTransformation> counit;  // ψ∘F ⇒ id on the domain
};

/// Builds ψ from least choices: ψ(y) is the least domain object whose image
/// is connected to y, through the least connecting arrow.
StrongEquivalence isStrongEquivalence(const Functor& f);

std::optional<GroupMap> groupIsomorphic(const AbstractGroup& a, const AbstractGroup& b);

struct MoritaWitness {
  std::vector<int> orbitMap;            // skeleton record of G -> record of H
  std::vector<GroupMap> isomorphisms;  // isotropy of G's record -> H's
};

std::optional<MoritaWitness> moritaEquivalent(const FiniteGroupoid& g, const FiniteGroupoid& h);

/// Span K <-ε- J -φ-> G.
struct GeneralizedMap {
  GroupoidPtr apex;
  Functor left;
  Functor right;
};

/// Validates both legs and that the left leg is an essential equivalence.
GeneralizedMap makeGeneralizedMap(Functor left, Functor right);
GeneralizedMap identityGeneralizedMap(const GroupoidPtr& g);
GeneralizedMap generalizedFromFunctor(const Functor& f);

/// g ∘ f through the weak fibered product of f.right and g.left.
GeneralizedMap composeGeneralized(const GeneralizedMap& f, const GeneralizedMap& g);

struct ConstantImage {
  int orbit = 0;
  AbstractGroup isotropy = AbstractGroup::trivial();
};
std::optional<ConstantImage> isGeneralizedConstant(const GeneralizedMap& f);

/// NO when the induced orbit maps differ; YES when a natural transformation
/// fills the square over the fibered product of the left legs; otherwise
/// UNKNOWN.
Verdict generalizedMapsEquivalent(const GeneralizedMap& f, const GeneralizedMap& g);

/// Orbit of K -> orbit of G induced by a span.
std::vector<int> inducedOrbitMap(const GeneralizedMap& f);

}  // namespace orbicat
