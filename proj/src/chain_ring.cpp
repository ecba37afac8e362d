#include "chainring/chain_ring.hpp"

namespace chainring {

std::string RingElement::to_string() const { return a.to_string() + "+u" + b.to_string(); }

RingElement ring_inv(const RingElement& x) {
    if (x.a.is_zero()) throw NotAUnit("ring element with zero field part is not a unit");
    const FieldElement ai = inverse(x.a);
    return {ai, -(ai * ai * x.b)};
}

RingAut make_aut(unsigned h, const FieldElement& epsilon) {
    if (epsilon.is_zero()) throw std::invalid_argument("automorphism scale epsilon must be nonzero");
    return {FieldAut{h % epsilon.ctx().m()}, epsilon};
}

RingElement RingAut::operator()(const RingElement& x) const {
    return {frobenius(x.a, theta), epsilon * frobenius(x.b, theta)};
}

std::string RingAut::to_string() const { return "h=" + std::to_string(theta.h) + ",eps=" + epsilon.to_string(); }

RingElement aut_apply(const RingAut& sigma, const RingElement& x) { return sigma(x); }

RingAut aut_invert(const RingAut& sigma) {
    const unsigned m = sigma.epsilon.ctx().m();
    const FieldAut ti = aut_inverse(sigma.theta, m);
    return {ti, frobenius(inverse(sigma.epsilon), ti)};
}

RingAut aut_compose(const RingAut& outer, const RingAut& inner) {
    // outer(inner(a + ub)) = t_o(t_i(a)) + u eps_o t_o(eps_i) t_o(t_i(b)).
    const unsigned m = outer.epsilon.ctx().m();
    return {aut_compose(outer.theta, inner.theta, m), outer.epsilon * frobenius(inner.epsilon, outer.theta)};
}

std::vector<RingAut> all_automorphisms(const FieldPtr& f) {
    std::vector<RingAut> out;
    for (unsigned h = 0; h < f->m(); ++h) {
        for (const auto& e : f->units()) out.push_back({FieldAut{h}, e});
    }
    return out;
}

RingElement dual_constant(const RingElement& lambda, const RingAut& sigma) {
    if (!lambda.is_unit()) throw std::invalid_argument("constacyclic constant must be a unit");
    return aut_invert(sigma)(ring_inv(lambda));
}

std::vector<RingElement> ring_units(const FieldPtr& f) {
    std::vector<RingElement> out;
    for (const auto& a : f->units()) {
        for (const auto& b : f->elements()) out.push_back({a, b});
    }
    return out;
}

}  // namespace chainring
