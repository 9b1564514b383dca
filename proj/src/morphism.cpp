#include "sympcoh/morphism.hpp"

#include <regex>

#include "sympcoh/errors.hpp"
#include "sympcoh/parser.hpp"

namespace sympcoh {

LieMorphism::LieMorphism(LieAlgebra source, LieAlgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionMismatch("morphism matrix must be " + std::to_string(target_.dim()) + "x" +
                            std::to_string(source_.dim()) + " (target dim x source dim)");
}

KForm pullback(const LieMorphism& f, const KForm& a) {
  if (a.ambient_dim() != f.target().dim()) throw DimensionMismatch("pullback: form does not live on the target");
  return linear_pullback(f.matrix(), a);
}

std::optional<std::size_t> validate_morphism(const LieMorphism& f) {
  const std::size_t n = f.target().dim();
  for (std::size_t i = 0; i < n; ++i) {
    const KForm generator = KForm::basis(n, Mask{1} << i);
    const KForm lhs = pullback(f, f.target().generator_differential(i));
    const KForm rhs = differential(f.source(), pullback(f, generator));
    if (!(lhs - rhs).is_zero()) return i + 1;
  }
  return std::nullopt;
}

void require_morphism(const LieMorphism& f) {
  if (auto bad = validate_morphism(f))
    throw InvalidStructure("not a Lie algebra morphism: pullback does not commute with d on e^" +
                           std::to_string(*bad));
}

Matrix pullback_matrix(const LieMorphism& f, std::size_t k) {
  const FormBasis in(f.target().dim(), k);
  const FormBasis out(f.source().dim(), k);
  Matrix m(out.size(), in.size());
  for (std::size_t c = 0; c < in.size(); ++c) {
    const KForm image = pullback(f, in.element(c));
    for (const auto& [mask, coeff] : image.terms()) m(out.index_of(mask), c) = coeff;
  }
  return m;
}

bool check_pullback_symplectic(const LieMorphism& f, const KForm& omega_target, const KForm& omega_source) {
  if (omega_source.ambient_dim() != f.source().dim()) throw DimensionMismatch("source form has the wrong dimension");
  return (pullback(f, omega_target) - omega_source).is_zero();
}

Theory parse_theory(const std::string& name, std::size_t* p, std::size_t* q) {
  if (name == "deRham") return Theory::de_rham;
  if (name == "dLambda") return Theory::d_lambda;
  if (name == "BottChern") return Theory::bott_chern;
  if (name == "Aeppli") return Theory::aeppli;
  static const std::regex pure_re(R"(J\((\d+),(\d+)\))");
  std::smatch match;
  if (std::regex_match(name, match, pure_re)) {
    if (p) *p = std::stoul(match[1].str());
    if (q) *q = std::stoul(match[2].str());
    return Theory::pure_type;
  }
  throw ParseError("unknown theory '" + name + "' (deRham, dLambda, BottChern, Aeppli, J(p,q))", 0);
}

std::string to_string(const TheoryDegree& t) {
  switch (t.theory) {
    case Theory::de_rham:
      return "deRham";
    case Theory::d_lambda:
      return "dLambda";
    case Theory::bott_chern:
      return "BottChern";
    case Theory::aeppli:
      return "Aeppli";
    case Theory::pure_type:
      return "J(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
  }
  return "?";
}

namespace {

struct Subquotient {
  Subspace cycles;
  Subspace boundaries;
};

Subquotient de_rham_group(const LieAlgebra& g, std::size_t k) {
  const Subspace closed = kernel(d_matrix(g, k));
  const Subspace exact = k == 0 ? Subspace(1) : image(d_matrix(g, k - 1));
  return {closed, exact};
}

Subquotient symplectic_group(const SymplecticStructure& s, Theory theory, std::size_t k) {
  const SymplecticComplex c(s);
  const int deg = static_cast<int>(k);
  switch (theory) {
    case Theory::d_lambda:
      return {c.dlambda_closed(deg), c.dlambda_exact(deg)};
    case Theory::bott_chern:
      return {c.bottchern_cycles(deg), c.bottchern_boundaries(deg)};
    case Theory::aeppli:
      return {c.aeppli_cycles(deg), c.aeppli_boundaries(deg)};
    default:
      throw Error("not a symplectic theory");
  }
}

// H_J^{(p,q),(q,p)} as the subquotient (Z∩P + B) / B of the de Rham group.
Subquotient pure_type_group(const AlmostComplexStructure& a, std::size_t p, std::size_t q) {
  const Subquotient dr = de_rham_group(a.algebra(), p + q);
  const Subspace cycles = intersect(dr.cycles, pure_type_subspace(a, p, q));
  return {sum(cycles, dr.boundaries), dr.boundaries};
}

}  // namespace

InjectivityReport induced_report(const LieMorphism& f, const TheoryDegree& theory,
                                 const MorphismStructures& structures) {
  require_morphism(f);
  const std::size_t k = theory.theory == Theory::pure_type ? theory.p + theory.q : theory.degree;
  if (k > f.target().dim() || k > f.source().dim()) throw DimensionMismatch("degree exceeds the algebra dimension");

  Subquotient on_target;  // group on X, the domain of π*
  Subquotient on_source;  // group on X̃
  switch (theory.theory) {
    case Theory::de_rham:
      on_target = de_rham_group(f.target(), k);
      on_source = de_rham_group(f.source(), k);
      break;
    case Theory::d_lambda:
    case Theory::bott_chern:
    case Theory::aeppli: {
      if (!structures.target_omega || !structures.source_omega)
        throw InvalidStructure("symplectic theories need a symplectic form on both algebras");
      if (structures.target_omega->algebra() != f.target() || structures.source_omega->algebra() != f.source())
        throw InvalidStructure("symplectic structures are attached to the wrong algebras");
      if (!check_pullback_symplectic(f, structures.target_omega->omega(), structures.source_omega->omega()))
        throw HypothesisViolation("pullback of the target symplectic form is not the source symplectic form");
      on_target = symplectic_group(*structures.target_omega, theory.theory, k);
      on_source = symplectic_group(*structures.source_omega, theory.theory, k);
      break;
    }
    case Theory::pure_type: {
      if (!structures.target_j || !structures.source_j)
        throw InvalidStructure("pure-type theories need an almost-complex structure on both algebras");
      if (structures.target_j->algebra() != f.target() || structures.source_j->algebra() != f.source())
        throw InvalidStructure("almost-complex structures are attached to the wrong algebras");
      on_target = pure_type_group(*structures.target_j, theory.p, theory.q);
      on_source = pure_type_group(*structures.source_j, theory.p, theory.q);
      break;
    }
  }

  const InducedRank r = induced_map_rank(pullback_matrix(f, k), on_target.cycles, on_target.boundaries,
                                         on_source.cycles, on_source.boundaries);
  InjectivityReport out;
  out.theory = theory;
  out.theory.degree = k;
  out.source_dim = r.source_dim;
  out.target_dim = r.target_dim;
  out.rank = r.rank;
  out.injective = r.injective;
  out.surjective = r.surjective;
  return out;
}

}  // namespace sympcoh
