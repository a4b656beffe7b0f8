#include "mzv/zetasym.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

void ZetaCombination::add(std::size_t shift, const BigRational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(shift, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BigRational ZetaCombination::coeff(std::size_t shift) const {
    const auto it = terms_.find(shift);
    return it == terms_.end() ? BigRational() : it->second;
}

std::size_t ZetaCombination::max_shift() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::string ZetaCombination::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        nlohmann::ordered_json term;
        term["shift"] = it->first;
        term["coeff"] = it->second.str();
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json doc;
    doc["terms"] = std::move(terms);
    return doc.dump();
}

ZetaCombination ZetaCombination::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("ZetaCombination JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw std::invalid_argument("ZetaCombination JSON: missing \"terms\" array");
    }
    ZetaCombination out;
    for (const auto& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("shift") || !term.contains("coeff") ||
            !term["shift"].is_number_unsigned() || !term["coeff"].is_string()) {
            throw std::invalid_argument("ZetaCombination JSON: malformed term " + term.dump());
        }
        const auto shift = term["shift"].get<std::size_t>();
        const BigRational c = BigRational::parse(term["coeff"].get<std::string>());
        if (c.is_zero() || out.terms_.count(shift) != 0) {
            throw std::invalid_argument("ZetaCombination JSON: zero or duplicate term " +
                                        term.dump());
        }
        out.terms_.emplace(shift, c);
    }
    return out;
}

RationalPoly hurwitz_neg_poly(std::size_t m) {
    return bernoulli_poly(m + 1) * BigRational(-1, m + 1);
}

RationalPoly hurwitz_neg_poly_shifted(std::size_t m) {
    return bernoulli_bar_poly(m + 1) * BigRational(-1, m + 1);
}

RationalPoly hurwitz_neg_via_lemma3(std::size_t m) {
    std::vector<BigRational> cs(m + 2);
    for (std::size_t k = 0; k <= m; ++k) {
        cs[m - k] += BigRational(binomial(m, k)) * zeta_neg(k);
    }
    cs[m] += BigRational(1);
    cs[m + 1] -= BigRational(1, m + 1);
    return RationalPoly(std::move(cs));
}

BigRational zeta_neg(std::size_t m) { return bernoulli_bar(m + 1) * BigRational(-1, m + 1); }

std::vector<RationalPoly> mzv_level_polys(const MZVSpec& spec) {
    const auto& args = spec.trailing_args;
    std::vector<RationalPoly> levels;
    if (args.empty()) {
        return levels;
    }
    levels.reserve(args.size());
    levels.push_back(hurwitz_neg_poly_shifted(args.back()));
    for (std::size_t j = args.size() - 1; j-- > 0;) {
        const RationalPoly& inner = levels.back();
        RationalPoly outer;
        const auto cs = inner.coefficients();
        for (std::size_t e = 0; e < cs.size(); ++e) {
            if (!cs[e].is_zero()) {
                outer += hurwitz_neg_poly_shifted(args[j] + e) * cs[e];
            }
        }
        levels.push_back(std::move(outer));
    }
    return levels;
}

ZetaCombination mzv_reduce(const MZVSpec& spec) {
    ZetaCombination out;
    const auto levels = mzv_level_polys(spec);
    if (levels.empty()) {
        out.add(0, BigRational(1));
        return out;
    }
    const auto cs = levels.back().coefficients();
    for (std::size_t e = 0; e < cs.size(); ++e) {
        out.add(e, cs[e]);
    }
    return out;
}

ZetaCombination mzv_theorem_k3(std::size_t m2, std::size_t m3) {
    ZetaCombination out;
    for (std::size_t k3 = 0; k3 <= m3 + 1; ++k3) {
        const BigRational outer =
            BigRational(binomial(m3 + 1, k3), m3 + 1) * bernoulli_bar(k3);
        const std::size_t inner_degree = m2 + m3 + 2 - k3;
        for (std::size_t k2 = 0; k2 <= inner_degree; ++k2) {
            const BigRational inner =
                BigRational(binomial(inner_degree, k2), inner_degree) * bernoulli_bar(k2);
            out.add(inner_degree - k2, outer * inner);
        }
    }
    return out;
}

BigRational combination_eval_exact(const ZetaCombination& combination, std::size_t m1) {
    BigRational total;
    for (const auto& [shift, c] : combination.terms()) {
        total += c * zeta_neg(m1 + shift);
    }
    return total;
}

BigRational mzv_eval_exact(const MZVSpec& spec, std::size_t m1) {
    return combination_eval_exact(mzv_reduce(spec), m1);
}

std::complex<double> combination_eval_numeric(const ZetaCombination& combination,
                                              std::complex<double> s1) {
    require_finite(s1, "s1");
    constexpr double tol = 1e-12;
    for (const auto& [shift, c] : combination.terms()) {
        const std::complex<double> arg = s1 - static_cast<double>(shift);
        if (std::abs(arg - 1.0) <= tol) {
            throw PoleHit("zeta(s1 - " + std::to_string(shift) +
                          ") sits on the pole at 1 with nonzero coefficient " + c.str());
        }
    }
    const double nearest = std::round(s1.real());
    if (nearest >= 1.0 && std::abs(s1.imag()) <= tol && std::abs(s1.real() - nearest) <= tol) {
        throw DomainViolation("s1 must not be a positive integer");
    }
    std::complex<double> total = 0.0;
    for (const auto& [shift, c] : combination.terms()) {
        total += c.to_double() * riemann_zeta_num(s1 - static_cast<double>(shift));
    }
    return total;
}

std::complex<double> mzv_eval_numeric(const MZVSpec& spec, std::complex<double> s1) {
    return combination_eval_numeric(mzv_reduce(spec), s1);
}

}  // namespace mzv
