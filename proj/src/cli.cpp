#include "mzv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/format.hpp"
#include "mzv/fourier.hpp"
#include "mzv/numerics.hpp"
#include "mzv/verify.hpp"
#include "mzv/zetasym.hpp"

namespace mzv::cli {

namespace {

using Json = nlohmann::ordered_json;
using Action = std::function<int(std::ostream&)>;

constexpr long kDefaultFourierCutoff = 10000;
constexpr long kDefaultLatticeCutoff = 2000;
constexpr int kDefaultPanels = 40;

// Re-tags a value parse failure with the flag that carried it.
template <typename Parse>
auto parse_flag(const std::string& flag, const std::string& text, Parse&& parse) {
    try {
        return parse(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

Complex complex_flag(const std::string& flag, const std::string& text) {
    return parse_flag(flag, text, [](const std::string& t) { return parse_complex(t); });
}

std::vector<std::size_t> list_flag(const std::string& flag, const std::string& text) {
    return parse_flag(flag, text, [](const std::string& t) { return parse_index_list(t); });
}

Json coeff_array(const RationalPoly& p) {
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) {
        cs.push_back(c.str());
    }
    return cs;
}

Json index_array(std::span<const std::size_t> values) {
    Json out = Json::array();
    for (const auto v : values) {
        out.push_back(v);
    }
    return out;
}

void print_combination_table(std::ostream& os, const ZetaCombination& combination) {
    os << "shift\tcoeff\n";
    for (auto it = combination.terms().rbegin(); it != combination.terms().rend(); ++it) {
        os << it->first << "\t" << it->second.str() << "\n";
    }
}

// A sweep of truncated approximations against one reference value.
struct Sweep {
    std::string label;
    std::vector<long> cutoffs;
    std::function<Complex(long)> approximate;
    Complex reference;
};

int emit_sweep(std::ostream& os, const Sweep& sweep, bool csv, bool json) {
    std::vector<ConvergenceRow> rows;
    std::vector<Complex> values;
    for (const long n : sweep.cutoffs) {
        const Complex v = sweep.approximate(n);
        values.push_back(v);
        rows.push_back({n, v.real(), sweep.reference.real(), std::abs(v - sweep.reference)});
    }
    if (csv) {
        write_convergence_csv(os, rows);
        return kSuccess;
    }
    if (json) {
        Json doc;
        doc["kind"] = sweep.label;
        doc["reference"] = format_complex(sweep.reference);
        Json list = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Json item;
            item["cutoff"] = rows[i].cutoff;
            item["approximation"] = format_complex(values[i]);
            item["abs_error"] = rows[i].abs_error;
            list.push_back(std::move(item));
        }
        doc["rows"] = std::move(list);
        os << doc.dump() << "\n";
        return kSuccess;
    }
    os << sweep.label << "\nreference\t" << format_complex(sweep.reference) << "\n";
    os << "cutoff\tapproximation\tabs_error\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << rows[i].cutoff << "\t" << format_complex(values[i]) << "\t"
           << format_double(rows[i].abs_error) << "\n";
    }
    return kSuccess;
}

class Dispatcher {
public:
    explicit Dispatcher(long fourier_cutoff) : fourier_cutoff_(fourier_cutoff) {}

    void build(CLI::App& app) {
        app.require_subcommand(1);
        build_bernoulli(app);
        build_zeta(app);
        build_hurwitz(app);
        build_mzv(app);
        build_bfunc(app);
        build_fourier(app);
        build_prop2(app);
        build_parseval(app);
        build_verify(app);
    }

    const Action& action() const { return action_; }

private:
    CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& description) {
        CLI::App* sub = parent.add_subcommand(name, description);
        sub->add_flag("--json", json_, "Emit JSON instead of a table");
        return sub;
    }

    void build_bernoulli(CLI::App& app) {
        auto* group = app.add_subcommand("bernoulli", "Exact Bernoulli numbers and polynomials");
        group->require_subcommand(1);

        auto* num = leaf(*group, "num", "B_n (or Bbar_n = B_n(1) with --bar)");
        num->add_option("n", index_, "Index n >= 0")->required()->check(CLI::Range(0, 100000));
        num->add_flag("--bar", flag_, "Shifted number B_n(1)");
        num->callback([this] {
            action_ = [this](std::ostream& os) {
                const BigRational v = flag_ ? bernoulli_bar(index_) : bernoulli_number(index_);
                if (json_) {
                    Json doc;
                    doc["n"] = index_;
                    doc["value"] = v.str();
                    os << doc.dump() << "\n";
                } else {
                    os << format_rational(v) << "\n";
                }
                return kSuccess;
            };
        });

        auto* poly = leaf(*group, "poly", "B_m(a) (or B_m(a+1) with --bar)");
        poly->add_option("m", index_, "Degree m >= 0")->required()->check(CLI::Range(0, 100000));
        poly->add_flag("--bar", flag_, "Shifted polynomial B_m(a+1)");
        poly->callback([this] {
            action_ = [this](std::ostream& os) {
                return emit_poly(os, flag_ ? bernoulli_bar_poly(index_) : bernoulli_poly(index_));
            };
        });
    }

    void build_zeta(CLI::App& app) {
        auto* group = app.add_subcommand("zeta", "Riemann zeta at non-positive integers");
        group->require_subcommand(1);
        auto* neg = leaf(*group, "neg", "Exact zeta(-m)");
        neg->add_option("m", index_, "m >= 0")->required()->check(CLI::Range(0, 100000));
        neg->callback([this] {
            action_ = [this](std::ostream& os) {
                const BigRational v = zeta_neg(index_);
                if (json_) {
                    Json doc;
                    doc["m"] = index_;
                    doc["value"] = v.str();
                    os << doc.dump() << "\n";
                } else {
                    os << format_rational(v) << "\n";
                }
                return kSuccess;
            };
        });
    }

    void build_hurwitz(CLI::App& app) {
        auto* group = app.add_subcommand("hurwitz", "Hurwitz zeta at non-positive integers");
        group->require_subcommand(1);
        auto* poly = leaf(*group, "poly", "zeta(-m, a) as a polynomial in a");
        poly->add_option("m", index_, "m >= 0")->required()->check(CLI::Range(0, 100000));
        poly->add_flag("--shifted", flag_, "zeta(-m, a + 1) instead");
        poly->callback([this] {
            action_ = [this](std::ostream& os) {
                return emit_poly(os, flag_ ? hurwitz_neg_poly_shifted(index_) : hurwitz_neg_poly(index_));
            };
        });
    }

    void build_mzv(CLI::App& app) {
        auto* group = app.add_subcommand("mzv", "Multiple zeta values with non-positive trailing arguments");
        group->require_subcommand(1);

        auto* reduce = leaf(*group, "reduce", "Reduce zeta_k(s1, -m2, ..., -mk) to shifted zeta(s1 - e)");
        reduce->add_option("-m,--trailing", list_text_, "Comma-separated m2,...,mk (empty for k = 1)")
            ->required();
        reduce->callback([this] {
            action_ = [this](std::ostream& os) {
                return emit_combination(os, mzv_reduce({list_flag("-m", list_text_)}));
            };
        });

        auto* theorem = leaf(*group, "theorem", "The explicit k = 3 double-sum formula");
        theorem->add_option("--m2", m2_, "m2 >= 0")->required()->check(CLI::Range(0, 10000));
        theorem->add_option("--m3", m3_, "m3 >= 0")->required()->check(CLI::Range(0, 10000));
        theorem->callback([this] {
            action_ = [this](std::ostream& os) { return emit_combination(os, mzv_theorem_k3(m2_, m3_)); };
        });

        auto* eval = leaf(*group, "eval", "Evaluate zeta_k(s1, -m2, ..., -mk)");
        eval->add_option("-m,--trailing", list_text_, "Comma-separated m2,...,mk")->required();
        eval->add_option("--s1", s1_text_, "s1 as a, a+bi or a-bi")->required();
        eval->callback([this] { action_ = [this](std::ostream& os) { return mzv_eval(os); }; });
    }

    int mzv_eval(std::ostream& os) {
        const MZVSpec spec{list_flag("-m", list_text_)};
        const Complex s1 = complex_flag("--s1", s1_text_);
        const bool non_positive_integer =
            s1.imag() == 0.0 && s1.real() <= 0.0 && s1.real() == std::floor(s1.real()) && s1.real() > -1e6;
        const Complex numeric = mzv_eval_numeric(spec, s1);
        Json doc;
        doc["s1"] = format_complex(s1);
        if (non_positive_integer) {
            const BigRational exact = mzv_eval_exact(spec, static_cast<std::size_t>(-s1.real()));
            doc["exact"] = exact.str();
        }
        doc["numeric"] = format_complex(numeric);
        if (json_) {
            os << doc.dump() << "\n";
        } else {
            if (doc.contains("exact")) {
                os << "exact\t" << doc["exact"].get<std::string>() << "\n";
            }
            os << "numeric\t" << doc["numeric"].get<std::string>() << "\n";
        }
        return kSuccess;
    }

    void build_bfunc(CLI::App& app) {
        auto* bfunc = leaf(app, "bfunc", "B(s, a) = s zeta(s + 1, a)");
        bfunc->add_option("--s", s1_text_, "s as a, a+bi or a-bi")->required();
        bfunc->add_option("--alpha", alpha_, "a > 0")->required();
        bfunc->add_option("--em-terms", em_terms_, "Euler-Maclaurin head terms N (>= 8)");
        bfunc->add_option("--em-order", em_order_, "Euler-Maclaurin corrections J (1..20)");
        bfunc->callback([this] {
            action_ = [this](std::ostream& os) {
                const Complex s = complex_flag("--s", s1_text_);
                auto params = EulerMaclaurinParams::defaults_for(s + 1.0);
                if (em_terms_) {
                    params.head_terms = *em_terms_;
                }
                if (em_order_) {
                    params.correction_order = *em_order_;
                }
                const Complex v = bernoulli_function(s, alpha_, params);
                if (json_) {
                    Json doc;
                    doc["s"] = format_complex(s);
                    doc["alpha"] = alpha_;
                    doc["value"] = format_complex(v);
                    os << doc.dump() << "\n";
                } else {
                    os << format_complex(v) << "\n";
                }
                return kSuccess;
            };
        });
    }

    void build_fourier(CLI::App& app) {
        auto* group = app.add_subcommand("fourier", "Truncated Fourier series on [0, 1]");
        group->require_subcommand(1);
        auto* partial = leaf(*group, "partial", "Partial sum against its exact or numeric reference");
        partial->add_option("--kind", kind_, "bernoulli | hurwitz-neg | hurwitz")
            ->required()
            ->check(CLI::IsMember({"bernoulli", "hurwitz-neg", "hurwitz"}));
        partial->add_option("-m", degree_, "m for the bernoulli/hurwitz-neg series")->check(CLI::Range(0, 150));
        partial->add_option("--s", s1_text_, "s for the hurwitz series (Re s < 1)");
        partial->add_option("--alpha", alpha_, "a in [0, 1]")->required();
        add_cutoff_options(partial);
        partial->callback([this] { action_ = [this](std::ostream& os) { return fourier_partial(os); }; });
    }

    int fourier_partial(std::ostream& os) {
        Sweep sweep;
        sweep.cutoffs = cutoffs(fourier_cutoff_);
        const double alpha = alpha_;
        if (kind_ == "hurwitz") {
            if (s1_text_.empty()) {
                throw std::invalid_argument("--s is required for --kind hurwitz");
            }
            const Complex s = complex_flag("--s", s1_text_);
            sweep.label = "hurwitz s=" + format_complex(s) + " alpha=" + format_double(alpha);
            sweep.approximate = [s, alpha](long n) { return hurwitz_fourier_partial(s, alpha, {n}); };
            sweep.reference = hurwitz_zeta_num(s, alpha);
        } else {
            if (!degree_) {
                throw std::invalid_argument("-m is required for --kind " + kind_);
            }
            const int m = *degree_;
            sweep.label = kind_ + " m=" + std::to_string(m) + " alpha=" + format_double(alpha);
            if (kind_ == "bernoulli") {
                sweep.approximate = [m, alpha](long n) { return Complex(bernoulli_fourier_partial(m, alpha, {n})); };
                sweep.reference = poly_eval(bernoulli_poly(static_cast<std::size_t>(m)), alpha);
            } else {
                sweep.approximate = [m, alpha](long n) {
                    return Complex(hurwitz_neg_fourier_partial(m, alpha, {n}));
                };
                sweep.reference = poly_eval(hurwitz_neg_poly(static_cast<std::size_t>(m)), alpha);
            }
        }
        return emit_sweep(os, sweep, csv_, json_);
    }

    void build_prop2(CLI::App& app) {
        auto* group = app.add_subcommand("prop2", "Integrals of products of Bernoulli polynomials");
        group->require_subcommand(1);

        auto* lhs = leaf(*group, "lhs", "Exact nested Bernoulli-number sum");
        lhs->add_option("-m", list_text_, "Comma-separated m_1,...,m_r (factor B_{m_i+1})")->required();
        lhs->callback([this] {
            action_ = [this](std::ostream& os) {
                const auto m = nonempty_list();
                const BigRational v = prop2_lhs(m);
                if (json_) {
                    Json doc;
                    doc["m"] = index_array(m);
                    doc["value"] = v.str();
                    doc["by_integration"] = prop2_lhs_by_integration(m).str();
                    os << doc.dump() << "\n";
                } else {
                    os << format_rational(v) << "\n";
                }
                return kSuccess;
            };
        });

        auto* rhs = leaf(*group, "rhs", "Truncated lattice sum (Fourier coefficient a_target)");
        rhs->add_option("-m", list_text_, "Comma-separated m_1,...,m_r")->required();
        rhs->add_option("--target", target_, "Fourier index of the coefficient (default 0)");
        add_cutoff_options(rhs);
        rhs->callback([this] {
            action_ = [this](std::ostream& os) {
                const auto m = nonempty_list();
                const long target = target_;
                Sweep sweep;
                sweep.cutoffs = cutoffs(kDefaultLatticeCutoff);
                sweep.label = "prop2 rhs m=" + list_text_ + " target=" + std::to_string(target);
                sweep.approximate = [m, target](long n) { return product_fourier_coeff(m, target, {n}); };
                if (target == 0) {
                    sweep.reference = prop2_lhs(m).to_double();
                } else {
                    RationalPoly product = RationalPoly::constant(BigRational(1));
                    for (const auto mi : m) {
                        product = product * bernoulli_poly(mi + 1);
                    }
                    sweep.reference = polynomial_fourier_coeff(product, target);
                }
                return emit_sweep(os, sweep, csv_, json_);
            };
        });
    }

    void build_parseval(CLI::App& app) {
        auto* parseval = leaf(app, "parseval", "Integral of zeta(s1, a) zeta(s2, a) over (0, 1) vs closed form");
        parseval->add_option("--s1", s1_text_, "s1 (numeric mode)");
        parseval->add_option("--s2", s2_text_, "s2 (numeric mode)");
        parseval->add_option("-a", exact_a_, "a >= 0 for s1 = -a (exact mode)")->check(CLI::Range(0, 10000));
        parseval->add_option("-b", exact_b_, "b >= 0 for s2 = -b (exact mode)")->check(CLI::Range(0, 10000));
        parseval->add_option("--panels", panels_, "Quadrature panels (default 40)")->check(CLI::Range(1, 1000));
        parseval->callback([this] { action_ = [this](std::ostream& os) { return run_parseval(os); }; });
    }

    int run_parseval(std::ostream& os) {
        const bool exact_mode = exact_a_.has_value() || exact_b_.has_value();
        const bool numeric_mode = !s1_text_.empty() || !s2_text_.empty();
        if (exact_mode == numeric_mode || (exact_mode && !(exact_a_ && exact_b_)) ||
            (numeric_mode && (s1_text_.empty() || s2_text_.empty()))) {
            throw std::invalid_argument("parseval: give either --s1 and --s2, or -a and -b");
        }
        Json doc;
        if (exact_mode) {
            const auto [lhs, rhs] = parseval_exact_negint(*exact_a_, *exact_b_);
            doc["a"] = *exact_a_;
            doc["b"] = *exact_b_;
            doc["lhs"] = lhs.str();
            doc["rhs"] = rhs.str();
            doc["equal"] = lhs == rhs;
        } else {
            const Complex s1 = complex_flag("--s1", s1_text_);
            const Complex s2 = complex_flag("--s2", s2_text_);
            const Complex rhs = parseval_rhs(s1, s2);
            const Complex lhs = parseval_lhs_num(s1, s2, {panels_});
            doc["s1"] = format_complex(s1);
            doc["s2"] = format_complex(s2);
            doc["lhs"] = format_complex(lhs);
            doc["rhs"] = format_complex(rhs);
            doc["abs_error"] = std::abs(lhs - rhs);
        }
        if (json_) {
            os << doc.dump() << "\n";
        } else {
            for (const auto& [key, value] : doc.items()) {
                os << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
        return kSuccess;
    }

    void build_verify(CLI::App& app) {
        auto* verify = leaf(app, "verify", "Run an identity verification suite");
        std::vector<std::string> allowed = suite_names();
        allowed.emplace_back("all");
        verify->add_option("suite", kind_, "Suite name or 'all'")->required()->check(CLI::IsMember(allowed));
        verify->add_option("--max-m", max_m_, "Largest index for exact sweeps (default 30)")
            ->check(CLI::Range(0, 200));
        verify->add_option("-N,--cutoff", cutoff_, "Fourier cutoff");
        verify->add_option("--lattice-cutoff", lattice_cutoff_, "Lattice cutoff (default 2000)");
        verify->add_option("--panels", panels_, "Quadrature panels (default 40)")->check(CLI::Range(1, 1000));
        verify->callback([this] { action_ = [this](std::ostream& os) { return run_verify(os); }; });
    }

    int run_verify(std::ostream& os) {
        SuiteOptions options;
        options.max_m = max_m_;
        options.fourier_cutoff = cutoff_.value_or(fourier_cutoff_);
        options.lattice_cutoff = lattice_cutoff_.value_or(kDefaultLatticeCutoff);
        options.quadrature_panels = panels_;
        if (options.fourier_cutoff < 1 || options.lattice_cutoff < 1) {
            throw std::invalid_argument("cutoffs must be >= 1");
        }
        const std::vector<std::string> names =
            kind_ == "all" ? suite_names() : std::vector<std::string>{kind_};
        bool all_pass = true;
        for (const auto& name : names) {
            const VerificationReport report = run_suite(name, options);
            all_pass = all_pass && report.overall();
            os << (json_ ? report.to_json() + "\n" : report.to_table());
        }
        return all_pass ? kSuccess : kVerificationFailed;
    }

    void add_cutoff_options(CLI::App* sub) {
        sub->add_option("-N,--cutoff", cutoff_, "Truncation cutoff");
        sub->add_option("--cutoffs", cutoff_list_, "Comma-separated cutoffs for a convergence sweep");
        sub->add_flag("--csv", csv_, "Emit a CSV convergence report");
    }

    std::vector<long> cutoffs(long fallback) const {
        if (!cutoff_list_.empty()) {
            return parse_flag("--cutoffs", cutoff_list_, [](const std::string& t) { return parse_cutoff_list(t); });
        }
        const long n = cutoff_.value_or(fallback);
        if (n < 1) {
            throw std::invalid_argument("-N: cutoff must be >= 1");
        }
        return {n};
    }

    std::vector<std::size_t> nonempty_list() const {
        auto m = list_flag("-m", list_text_);
        if (m.empty()) {
            throw std::invalid_argument("-m: list must not be empty");
        }
        return m;
    }

    int emit_poly(std::ostream& os, const RationalPoly& p) const {
        if (json_) {
            Json doc;
            doc["m"] = index_;
            doc["coeffs"] = coeff_array(p);
            os << doc.dump() << "\n";
        } else {
            os << p.str() << "\n";
        }
        return kSuccess;
    }

    int emit_combination(std::ostream& os, const ZetaCombination& combination) const {
        if (json_) {
            os << combination.to_json() << "\n";
        } else {
            print_combination_table(os, combination);
        }
        return kSuccess;
    }

    long fourier_cutoff_;
    Action action_;

    bool json_ = false;
    bool flag_ = false;
    bool csv_ = false;
    std::size_t index_ = 0;
    std::size_t m2_ = 0;
    std::size_t m3_ = 0;
    std::size_t max_m_ = 30;
    std::optional<std::size_t> exact_a_;
    std::optional<std::size_t> exact_b_;
    std::optional<int> degree_;
    std::optional<int> em_terms_;
    std::optional<int> em_order_;
    std::optional<long> cutoff_;
    std::optional<long> lattice_cutoff_;
    long target_ = 0;
    int panels_ = kDefaultPanels;
    double alpha_ = 0.0;
    std::string list_text_;
    std::string s1_text_;
    std::string s2_text_;
    std::string kind_;
    std::string cutoff_list_;
};

}  // namespace

std::optional<long> default_cutoff_from_env() {
    const char* raw = std::getenv("MZV_DEFAULT_CUTOFF");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const std::string text(raw);
    if (text.size() > 12 || text.find_first_not_of("0123456789") != std::string::npos ||
        std::stol(text) < 1) {
        throw std::invalid_argument("MZV_DEFAULT_CUTOFF must be a positive integer, got '" + text + "'");
    }
    return std::stol(text);
}

CommandResult run(const CommandRequest& request) {
    CommandResult result;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Exact multiple zeta values at non-positive integers, Bernoulli functions, and "
                 "Fourier identity checks",
                 "mzv"};
    Dispatcher dispatcher(request.default_fourier_cutoff.value_or(kDefaultFourierCutoff));
    dispatcher.build(app);

    try {
        std::vector<std::string> reversed(request.args.rbegin(), request.args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kUsageError;
        // walk the leading words down the subcommand tree to name a bad one
        const CLI::App* level = &app;
        for (const auto& word : request.args) {
            if (word.rfind('-', 0) == 0 || level->get_subcommands({}).empty()) {
                break;
            }
            const CLI::App* next = level->get_subcommand_no_throw(word);
            if (next == nullptr) {
                result.err = "usage error: unknown subcommand '" + word + "'\n";
                return result;
            }
            level = next;
        }
        result.err = std::string("usage error: ") + e.what() + "\n";
        return result;
    }

    try {
        result.exit_code = dispatcher.action()(out);
    } catch (const PoleHit& e) {
        result.exit_code = kDomainError;
        err << "pole: " << e.what() << "\n";
    } catch (const DomainViolation& e) {
        result.exit_code = kDomainError;
        err << "domain error: " << e.what() << "\n";
    } catch (const ConvergenceUnsafe& e) {
        result.exit_code = kDomainError;
        err << "convergence: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        result.exit_code = kUsageError;
        err << "usage error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        result.exit_code = kDomainError;
        err << "domain error: " << e.what() << "\n";
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace mzv::cli
