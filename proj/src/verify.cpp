#include "mzv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mzv/bernoulli.hpp"
#include "mzv/fourier.hpp"
#include "mzv/format.hpp"
#include "mzv/numerics.hpp"
#include "mzv/zetasym.hpp"

namespace mzv {

bool VerificationReport::overall() const {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["overall"] = overall() ? "pass" : "fail";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json item;
        item["id"] = c.id;
        item["status"] = c.pass ? "pass" : "fail";
        item["lhs"] = c.lhs;
        item["rhs"] = c.rhs;
        item["error"] = c.error;
        list.push_back(std::move(item));
    }
    doc["cases"] = std::move(list);
    return doc.dump();
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    VerificationReport report;
    try {
        const auto doc = nlohmann::json::parse(text);
        report.suite = doc.at("suite").get<std::string>();
        for (const auto& item : doc.at("cases")) {
            VerificationCase c;
            c.id = item.at("id").get<std::string>();
            const auto status = item.at("status").get<std::string>();
            if (status != "pass" && status != "fail") {
                throw std::invalid_argument("unknown case status '" + status + "'");
            }
            c.pass = status == "pass";
            c.lhs = item.at("lhs").get<std::string>();
            c.rhs = item.at("rhs").get<std::string>();
            c.error = item.at("error").get<double>();
            report.cases.push_back(std::move(c));
        }
        const auto overall = doc.at("overall").get<std::string>();
        if (overall != (report.overall() ? "pass" : "fail")) {
            throw std::invalid_argument("\"overall\" disagrees with case statuses");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("VerificationReport JSON: ") + e.what());
    }
    return report;
}

std::string VerificationReport::to_table() const {
    const auto clip = [](const std::string& s) {
        return s.size() <= 40 ? s : s.substr(0, 37) + "...";
    };
    std::ostringstream os;
    for (const auto& c : cases) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  lhs=" << clip(c.lhs)
           << "  rhs=" << clip(c.rhs) << "  error=" << format_double(c.error) << "\n";
    }
    os << "suite " << suite << ": " << passed() << "/" << cases.size() << " passed, overall "
       << (overall() ? "pass" : "fail") << "\n";
    return os.str();
}

namespace {

std::string index_list_id(std::span<const std::size_t> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out + ")";
}

VerificationCase exact_case(std::string id, const std::string& lhs, const std::string& rhs) {
    return {std::move(id), lhs == rhs, lhs, rhs, lhs == rhs ? 0.0 : 1.0};
}

VerificationCase exact_case(std::string id, const BigRational& lhs, const BigRational& rhs) {
    return {std::move(id), lhs == rhs, lhs.str(), rhs.str(), std::abs((lhs - rhs).to_double())};
}

VerificationCase exact_case(std::string id, const RationalPoly& lhs, const RationalPoly& rhs) {
    return exact_case(std::move(id), lhs.str(), rhs.str());
}

VerificationCase numeric_case(std::string id, Complex lhs, Complex rhs, double tolerance) {
    const double err = std::abs(lhs - rhs);
    return {std::move(id), err <= tolerance, format_complex(lhs), format_complex(rhs), err};
}

VerificationCase relative_case(std::string id, double lhs, double rhs, double tolerance) {
    const double err = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    return {std::move(id), err <= tolerance, format_double(lhs), format_double(rhs), err};
}

// Guards a case body so a thrown error becomes a failing case.
template <typename Body>
void add_case(VerificationReport& report, const std::string& id, Body&& body) {
    try {
        report.cases.push_back(body());
    } catch (const std::exception& e) {
        report.cases.push_back({id, false, "error", e.what(), 1.0});
    }
}

VerificationReport suite_lemmas(const SuiteOptions& opt) {
    VerificationReport r{"lemmas", {}};
    for (std::size_t m = 0; m <= opt.max_m; ++m) {
        const std::string tag = "m=" + std::to_string(m);
        add_case(r, "hurwitz-shift " + tag, [&] {
            return exact_case("hurwitz-shift " + tag, hurwitz_neg_poly(m) - hurwitz_neg_poly_shifted(m),
                              RationalPoly::monomial(BigRational(1), m));
        });
        add_case(r, "bernoulli-shift " + tag, [&] {
            const RationalPoly b = bernoulli_poly(m);
            const RationalPoly expected =
                m == 0 ? RationalPoly{} : RationalPoly::monomial(BigRational(static_cast<long>(m)), m - 1);
            return exact_case("bernoulli-shift " + tag, poly_shift(b) - b, expected);
        });
        add_case(r, "bbar-shift " + tag, [&] {
            return exact_case("bbar-shift " + tag, bernoulli_bar_poly(m), poly_shift(bernoulli_poly(m)));
        });
        if (m >= 1) {
            add_case(r, "zero-mean " + tag, [&] {
                return exact_case("zero-mean " + tag, poly_integrate_01(bernoulli_poly(m)), BigRational());
            });
        }
    }
    add_case(r, "generating-function order=16", [&] {
        const bool ok = generating_function_matches(16);
        return VerificationCase{"generating-function order=16", ok, ok ? "match" : "mismatch",
                                "match", ok ? 0.0 : 1.0};
    });
    return r;
}

VerificationReport suite_prop1(const SuiteOptions& opt) {
    VerificationReport r{"prop1", {}};
    for (std::size_t m = 0; m <= opt.max_m; ++m) {
        const std::string id = "m=" + std::to_string(m);
        add_case(r, id, [&] { return exact_case(id, hurwitz_neg_via_lemma3(m), hurwitz_neg_poly(m)); });
    }
    return r;
}

VerificationReport suite_prop2(const SuiteOptions& opt) {
    VerificationReport r{"prop2", {}};
    const std::size_t top = std::min<std::size_t>(opt.max_m, 4);
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::size_t> m(len, 0);
        while (true) {
            const std::string id = "exact " + index_list_id(m);
            add_case(r, id, [&] { return exact_case(id, prop2_lhs(m), prop2_lhs_by_integration(m)); });
            std::size_t i = 0;
            while (i < len && m[i] == top) {
                m[i++] = 0;
            }
            if (i == len) {
                break;
            }
            ++m[i];
        }
    }
    const FourierTruncation trunc{opt.lattice_cutoff};
    for (std::size_t m = 0; m <= top; ++m) {
        const std::vector<std::size_t> single{m};
        const std::string id = "rhs " + index_list_id(single) + " empty sum";
        add_case(r, id, [&] {
            const double v = prop2_rhs_truncated(single, trunc);
            return VerificationCase{id, v == 0.0, format_double(v), "0", std::abs(v)};
        });
    }
    add_case(r, "rhs (1,1)", [&] {
        const std::vector<std::size_t> m{1, 1};
        return numeric_case("rhs (1,1) N=" + std::to_string(trunc.cutoff),
                            prop2_rhs_truncated(m, trunc), 1.0 / 180.0, 1e-6);
    });
    add_case(r, "rhs (0,0)", [&] {
        const std::vector<std::size_t> m{0, 0};
        return numeric_case("rhs (0,0) N=" + std::to_string(trunc.cutoff),
                            prop2_rhs_truncated(m, trunc), 1.0 / 12.0, 1e-3);
    });
    return r;
}

VerificationReport suite_parseval(const SuiteOptions& opt) {
    VerificationReport r{"parseval", {}};
    const std::size_t top = std::min<std::size_t>(opt.max_m, 8);
    for (std::size_t a = 0; a <= top; ++a) {
        for (std::size_t b = 0; b <= top; ++b) {
            const std::string id = "exact a=" + std::to_string(a) + " b=" + std::to_string(b);
            add_case(r, id, [&] {
                const auto [lhs, rhs] = parseval_exact_negint(a, b);
                return exact_case(id, lhs, rhs);
            });
        }
    }
    const ParsevalQuadrature quad{opt.quadrature_panels};
    add_case(r, "numeric s1=-0.3 s2=-0.4", [&] {
        return numeric_case("numeric s1=-0.3 s2=-0.4", parseval_lhs_num(-0.3, -0.4, quad),
                            parseval_rhs(-0.3, -0.4), 1e-6);
    });
    add_case(r, "numeric s1=0 s2=0", [&] {
        return numeric_case("numeric s1=0 s2=0", parseval_lhs_num(0.0, 0.0, quad), 1.0 / 12.0, 1e-8);
    });
    return r;
}

VerificationReport suite_fourier(const SuiteOptions& opt) {
    VerificationReport r{"fourier", {}};
    const FourierTruncation trunc{opt.fourier_cutoff};
    const std::string n_tag = " N=" + std::to_string(trunc.cutoff);
    add_case(r, "bernoulli m=3 a=0.3", [&] {
        return numeric_case("bernoulli m=3 a=0.3" + n_tag, bernoulli_fourier_partial(3, 0.3, trunc),
                            poly_eval(bernoulli_poly(3), 0.3), 1e-6);
    });
    add_case(r, "bernoulli m=2 a=0", [&] {
        return numeric_case("bernoulli m=2 a=0" + n_tag, bernoulli_fourier_partial(2, 0.0, trunc),
                            1.0 / 6.0, 1e-4);
    });
    add_case(r, "bernoulli m=1 a=0.5", [&] {
        return numeric_case("bernoulli m=1 a=0.5" + n_tag, bernoulli_fourier_partial(1, 0.5, trunc),
                            0.0, 1e-12);
    });
    add_case(r, "hurwitz s=-2 a=0.4", [&] {
        return numeric_case("hurwitz s=-2 a=0.4" + n_tag, hurwitz_fourier_partial(-2.0, 0.4, trunc),
                            poly_eval(hurwitz_neg_poly(2), 0.4), 1e-5);
    });
    for (int m = 1; m <= 5; ++m) {
        for (const double a : {0.1, 0.3, 0.7}) {
            const std::string id = "hurwitz-neg m=" + std::to_string(m) + " a=" + format_double(a) + n_tag;
            add_case(r, id, [&] {
                return numeric_case(id, hurwitz_neg_fourier_partial(m, a, trunc),
                                    poly_eval(hurwitz_neg_poly(static_cast<std::size_t>(m)), a), 1e-4);
            });
        }
    }
    return r;
}

VerificationReport suite_mzv(const SuiteOptions& opt) {
    VerificationReport r{"mzv-crosscheck", {}};
    const std::size_t top = std::min<std::size_t>(opt.max_m, 10);
    for (std::size_t m2 = 0; m2 <= top; ++m2) {
        for (std::size_t m3 = 0; m3 <= top; ++m3) {
            const std::string id = "theorem m2=" + std::to_string(m2) + " m3=" + std::to_string(m3);
            add_case(r, id, [&] {
                return exact_case(id, mzv_theorem_k3(m2, m3).to_json(), mzv_reduce({{m2, m3}}).to_json());
            });
        }
    }
    add_case(r, "k=2 oracle (0)", [&] {
        ZetaCombination expected;
        expected.add(1, BigRational(-1));
        expected.add(0, BigRational(-1, 2));
        return exact_case("k=2 oracle (0)", mzv_reduce({{0}}).to_json(), expected.to_json());
    });
    add_case(r, "eval (0,0) at 0", [&] {
        return exact_case("eval (0,0) at 0", mzv_eval_exact({{0, 0}}, 0), BigRational(-1, 4));
    });
    const std::size_t numeric_top = std::min<std::size_t>(opt.max_m, 3);
    for (std::size_t m2 = 0; m2 <= numeric_top; ++m2) {
        for (std::size_t m3 = 0; m3 <= numeric_top; ++m3) {
            const auto levels = mzv_level_polys({{m2, m3}});
            const auto inner = levels.front().coefficients();
            for (const long n : {1L, 5L, 10L}) {
                const std::string id = "continuation m2=" + std::to_string(m2) +
                                       " m3=" + std::to_string(m3) + " n=" + std::to_string(n);
                add_case(r, id, [&] {
                    // P_2(n) = sum_e c_e zeta(-(m2 + e), n + 1), c_e from P_3
                    Complex assembled = 0.0;
                    for (std::size_t e = 0; e < inner.size(); ++e) {
                        assembled += inner[e].to_double() *
                                     hurwitz_zeta_num(-static_cast<double>(m2 + e), static_cast<double>(n + 1));
                    }
                    const double exact = poly_eval(levels.back(), BigRational(n)).to_double();
                    return relative_case(id, assembled.real(), exact, 1e-9);
                });
            }
        }
    }
    return r;
}

VerificationReport suite_numerics(const SuiteOptions& opt) {
    VerificationReport r{"numerics", {}};
    const std::size_t top = std::min<std::size_t>(opt.max_m, 10);
    for (std::size_t m = 0; m <= top; ++m) {
        for (const double a : {0.1, 0.25, 0.5, 0.9, 1.0, 2.5}) {
            const std::string id = "hurwitz s=-" + std::to_string(m) + " a=" + format_double(a);
            add_case(r, id, [&] {
                return numeric_case(id, hurwitz_zeta_num(-static_cast<double>(m), a),
                                    poly_eval(hurwitz_neg_poly(m), a), 1e-10);
            });
        }
    }
    add_case(r, "riemann s=2", [&] {
        return numeric_case("riemann s=2", riemann_zeta_num(2.0), std::numbers::pi * std::numbers::pi / 6.0,
                            1e-10);
    });
    for (std::size_t m = 0; m <= std::min<std::size_t>(top, 8); ++m) {
        for (const double a : {0.25, 0.7, 1.5}) {
            const std::string id = "bfunc s=-" + std::to_string(m) + " a=" + format_double(a);
            add_case(r, id, [&] {
                return numeric_case(id, bernoulli_function(-static_cast<double>(m), a),
                                    poly_eval(bernoulli_poly(m), a), 1e-9);
            });
        }
    }
    add_case(r, "bfunc s=0", [&] {
        const Complex v = bernoulli_function(0.0, 0.3);
        return VerificationCase{"bfunc s=0 a=0.3", v == Complex(1.0), format_complex(v), "1",
                                std::abs(v - 1.0)};
    });
    for (const Complex s : {Complex(-4.5, 0.0), Complex(-2.0, 3.0), Complex(0.5, 1.0), Complex(3.0, -2.0)}) {
        const std::string id = "forward-shift s=" + format_complex(s) + " a=0.3";
        add_case(r, id, [&] {
            const Complex lhs = hurwitz_zeta_num(s, 0.3) - hurwitz_zeta_num(s, 1.3);
            return numeric_case(id, lhs, std::exp(-s * std::log(0.3)), 1e-10);
        });
    }
    return r;
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> suites = {
        {"lemmas", suite_lemmas},     {"prop1", suite_prop1},
        {"prop2", suite_prop2},       {"parseval", suite_parseval},
        {"fourier", suite_fourier},   {"mzv-crosscheck", suite_mzv},
        {"numerics", suite_numerics},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemmas",  "prop1",          "prop2",   "parseval",
                                                   "fourier", "mzv-crosscheck", "numerics"};
    return names;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end()) {
        throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
    }
    return it->second(options);
}

}  // namespace mzv
