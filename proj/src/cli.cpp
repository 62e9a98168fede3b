#include "hypvol/cli.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypvol/bernoulli.hpp"
#include "hypvol/formulas.hpp"
#include "hypvol/lfunctions.hpp"
#include "hypvol/verdicts.hpp"

namespace hypvol {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };
enum class Rounding { Truncate, HalfEven };

struct Settings {
    NumericContext ctx;
    ParityRule parity = ParityRule::DenominatorOnly;
    Format format = Format::Text;
    Rounding rounding = Rounding::Truncate;
    int digits = 20;
};

struct Row {
    std::optional<int> dimension;
    std::string quantity;
    std::optional<Ball> value;
    std::optional<Rational> exact;
    std::optional<std::string> verdict;
    std::optional<std::string> exact_text;  // replaces num/den in text output
};

Row exact_row(std::optional<int> dim, std::string quantity, Rational const& q, mpfr_prec_t prec)
{
    Row row;
    row.dimension = dim;
    row.quantity = std::move(quantity);
    row.exact = q;
    row.value = Ball::from_rational(q, prec);
    return row;
}

Row ball_row(std::optional<int> dim, std::string quantity, Ball const& b)
{
    Row row;
    row.dimension = dim;
    row.quantity = std::move(quantity);
    row.value = b;
    return row;
}

Row label_row(std::optional<int> dim, std::string quantity, std::string verdict)
{
    Row row;
    row.dimension = dim;
    row.quantity = std::move(quantity);
    row.verdict = std::move(verdict);
    return row;
}

std::string exact_string(Rational const& q)
{
    return q.is_integer() ? to_string(q.numerator()) : q.to_string();
}

// ---- rendering ----------------------------------------------------------

struct Rendered {
    std::optional<std::string> midpoint, radius, numerator, denominator;
};

Rendered render_numbers(Row const& row, int digits)
{
    Rendered r;
    if (row.value) {
        r.midpoint = row.value->mid_string(digits);
        r.radius = row.value->radius_string();
    }
    if (row.exact) {
        r.numerator = to_string(row.exact->numerator());
        r.denominator = to_string(row.exact->denominator());
    }
    return r;
}

void write_text(std::ostream& out, std::vector<Row> const& rows, int digits)
{
    for (auto const& row : rows) {
        Rendered r = render_numbers(row, digits);
        std::string line;
        if (row.dimension)
            line += "n=" + std::to_string(*row.dimension) + " ";
        line += row.quantity;
        if (row.exact)
            line += " = " + (row.exact_text ? *row.exact_text : exact_string(*row.exact));
        if (r.midpoint)
            line += std::string(row.exact ? " ~ " : " = ") + *r.midpoint + " +/- " + *r.radius;
        if (row.verdict)
            line += " [" + *row.verdict + "]";
        out << line << '\n';
    }
}

nlohmann::json optional_json(std::optional<std::string> const& s)
{
    return s ? nlohmann::json(*s) : nlohmann::json(nullptr);
}

void write_json(std::ostream& out, std::vector<Row> const& rows, int digits)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& row : rows) {
        Rendered r = render_numbers(row, digits);
        arr.push_back({
            {"dimension", row.dimension ? nlohmann::json(*row.dimension) : nlohmann::json(nullptr)},
            {"quantity", row.quantity},
            {"midpoint", optional_json(r.midpoint)},
            {"radius", optional_json(r.radius)},
            {"exact_numerator", optional_json(r.numerator)},
            {"exact_denominator", optional_json(r.denominator)},
            {"verdict", optional_json(row.verdict)},
        });
    }
    out << arr.dump(2) << '\n';
}

std::string csv_field(std::optional<std::string> const& s)
{
    if (!s)
        return "";
    if (s->find_first_of(",\"\n") == std::string::npos)
        return *s;
    std::string q = "\"";
    for (char c : *s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

void write_csv(std::ostream& out, std::vector<Row> const& rows, int digits)
{
    out << "dimension,quantity,midpoint,radius,exact_numerator,exact_denominator,verdict\n";
    for (auto const& row : rows) {
        Rendered r = render_numbers(row, digits);
        std::optional<std::string> dim;
        if (row.dimension)
            dim = std::to_string(*row.dimension);
        out << csv_field(dim) << ',' << csv_field(row.quantity) << ',' << csv_field(r.midpoint)
            << ',' << csv_field(r.radius) << ',' << csv_field(r.numerator) << ','
            << csv_field(r.denominator) << ',' << csv_field(row.verdict) << '\n';
    }
}

void write_rows(std::ostream& out, Settings const& s, std::vector<Row> const& rows)
{
    switch (s.format) {
    case Format::Text: write_text(out, rows, s.digits); break;
    case Format::Json: write_json(out, rows, s.digits); break;
    case Format::Csv: write_csv(out, rows, s.digits); break;
    }
}

// ---- table number formatting ---------------------------------------------

Integer floor_of(Rational const& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return q;
}

Integer round_to_integer(Rational const& x, Rounding mode)
{
    if (mode == Rounding::Truncate)
        return floor_of(x);  // x > 0 here
    Rational shifted = x + Rational(1, 2);
    Integer f = floor_of(shifted);
    if (shifted.is_integer() && f % 2 != 0)
        f -= 1;
    return f;
}

// Digits of x > 0 kept after rounding: fixed 3 decimals, or 4 significant
// digits with a decimal exponent.
std::pair<Integer, long> table_digits(Rational const& x, bool scientific, Rounding mode)
{
    if (!scientific)
        return {round_to_integer(x * Rational(1000), mode), -3};
    long e = static_cast<long>(decimal_digits(floor_of(x))) - 1;
    if (floor_of(x) == 0)
        throw std::invalid_argument("scientific table format needs values >= 1");
    Integer m = round_to_integer(x / pow(Rational(10), e - 3), mode);
    if (m == 10000) {
        m = 1000;
        ++e;
    }
    return {m, e};
}

std::string table_volume_format(Ball const& v, int n, Rounding mode)
{
    if (!v.is_positive())
        throw PrecisionError("volume enclosure not positive");
    bool scientific = n >= 14;
    auto lo = table_digits(v.lower_rational(), scientific, mode);
    auto hi = table_digits(v.upper_rational(), scientific, mode);
    if (lo != hi)
        throw PrecisionError("displayed digits of vol(M^" + std::to_string(n) + ") not yet stable");
    std::string d = to_string(lo.first);
    if (!scientific) {
        while (d.size() < 4)
            d.insert(d.begin(), '0');
        return d.substr(0, d.size() - 3) + "." + d.substr(d.size() - 3);
    }
    return d.substr(0, 1) + "." + d.substr(1) + " E" + std::to_string(lo.second);
}

// ---- commands ----------------------------------------------------------

std::pair<int, int> parse_range(std::string const& text)
{
    auto pos = text.find("..");
    int a = 0, b = 0;
    try {
        std::size_t used = 0;
        if (pos == std::string::npos) {
            a = b = std::stoi(text, &used);
            if (used != text.size())
                throw UsageError("");
        } else {
            std::string left = text.substr(0, pos), right = text.substr(pos + 2);
            a = std::stoi(left, &used);
            if (used != left.size())
                throw UsageError("");
            b = std::stoi(right, &used);
            if (used != right.size())
                throw UsageError("");
        }
    } catch (std::exception const&) {
        throw UsageError("malformed range '" + text + "' (expected a..b)");
    }
    if (a < 4 || b > 60 || a > b)
        throw UsageError("range must lie within 4..60");
    return {a, b};
}

int cmd_table(Settings const& s, std::string const& kind, std::string const& range,
              std::ostream& out)
{
    auto [a, b] = parse_range(range);
    std::vector<Row> rows;
    std::vector<std::string> lines;
    if (kind == "euler") {
        lines.push_back("n | |chi(M^n)|");
        for (int n = a + (a % 2); n <= b; n += 2) {
            Rational chi = euler_char_noncompact_even(n / 2);
            rows.push_back(exact_row(n, "chi_noncompact", chi, s.ctx.precision));
            lines.push_back(std::to_string(n) + " | " + to_string(chi.numerator()));
        }
    } else {
        lines.push_back("n | vol(M^n)");
        for (int n = a; n <= b; ++n) {
            auto [v, shown] = with_escalation(s.ctx, [&](NumericContext const& c) {
                Ball vol = vol_noncompact(n, c.precision);
                return std::make_pair(vol, table_volume_format(vol, n, s.rounding));
            });
            rows.push_back(ball_row(n, "vol_noncompact", v));
            lines.push_back(std::to_string(n) + " | " + shown);
        }
    }
    if (s.format == Format::Text) {
        for (auto const& l : lines)
            out << l << '\n';
    } else {
        write_rows(out, s, rows);
    }
    return kExitVerified;
}

std::vector<Row> report_rows(DimensionReport const& rep)
{
    int n = rep.dimension;
    mpfr_prec_t prec = rep.precision;
    std::vector<Row> rows;
    rows.push_back(label_row(n, "method", to_string(rep.method)));
    if (rep.chi_noncompact)
        rows.push_back(exact_row(n, "chi_noncompact", *rep.chi_noncompact, prec));
    rows.push_back(ball_row(n, "vol_noncompact", rep.vol_noncompact));
    if (rep.chi_compact)
        rows.push_back(exact_row(n, "chi_compact", *rep.chi_compact, prec));
    else
        rows.push_back(ball_row(n, "vol_compact", rep.compact_quantity));
    if (rep.min_cover_degree)
        rows.push_back(exact_row(n, "min_cover_degree", Rational(*rep.min_cover_degree), prec));
    for (auto const& q : rep.quantities) {
        if (q.exact)
            rows.push_back(exact_row(n, q.name, *q.exact, prec));
        else
            rows.push_back(ball_row(n, q.name, q.value));
    }
    for (auto const& f : rep.exclusion_factors) {
        if (f.exact)
            rows.push_back(exact_row(n, f.name, *f.exact, prec));
        else
            rows.push_back(ball_row(n, f.name, f.value));
    }
    for (auto const& l : rep.lambda_rows) {
        std::string tag = "[q=" + std::to_string(l.q) + "]";
        rows.push_back(exact_row(n, "lambda" + tag, l.lambda, prec));
        rows.push_back(exact_row(n, "lambda_chi" + tag, l.chi, prec));
    }
    for (auto const& c : rep.checks)
        rows.push_back(label_row(n, "check: " + c.name, to_string(c.decision)));
    for (auto const& a : rep.assumptions)
        rows.push_back(label_row(n, "assumption: " + a, "ASSUMED"));
    rows.push_back(label_row(n, "precision_bits", std::to_string(rep.precision)));
    Row verdict = label_row(n, "verdict", to_string(rep.verdict));
    if (rep.failing_check)
        verdict.quantity += " (failing: " + *rep.failing_check + ")";
    rows.push_back(verdict);
    return rows;
}

struct Outcome {
    std::optional<DimensionReport> report;
    std::string error;
    int code = kExitVerified;
};

int cmd_verify(Settings const& s, std::optional<int> dim, bool all, std::ostream& out,
               std::ostream& err)
{
    if (all == dim.has_value())
        throw UsageError("verify needs exactly one of <n> or --all");
    std::vector<int> dims;
    if (all) {
        for (int n = 30; n <= 60; ++n)
            dims.push_back(n);
    } else {
        if (*dim < 30)
            throw UsageError("verify supports dimensions n >= 30");
        dims.push_back(*dim);
    }

    VerifyOptions opts{s.ctx, s.parity};
    std::vector<Outcome> outcomes(dims.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < dims.size();) {
            Outcome& o = outcomes[i];
            try {
                o.report = verify_dimension(dims[i], opts);
                o.code = o.report->verdict == Verdict::Verified ? kExitVerified : kExitUndecided;
            } catch (PrecisionError const& e) {
                o.error = e.what();
                o.code = kExitPrecision;
            } catch (ConsistencyError const& e) {
                o.error = std::string("consistency check failed: ") + e.what();
                o.code = kExitUndecided;
            }
        }
    };
    unsigned nthreads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(dims.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    std::vector<Row> rows;
    int code = kExitVerified;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        auto const& o = outcomes[i];
        if (o.report) {
            auto r = report_rows(*o.report);
            rows.insert(rows.end(), r.begin(), r.end());
        } else {
            err << "n=" << dims[i] << ": " << o.error << '\n';
            rows.push_back(label_row(dims[i], "verdict",
                                     o.code == kExitPrecision ? "PRECISION_INSUFFICIENT" : "UNDECIDED"));
        }
        if (o.code == kExitPrecision || (o.code == kExitUndecided && code == kExitVerified))
            code = o.code;
    }
    write_rows(out, s, rows);
    return code;
}

struct ValueParams {
    std::optional<long> n, j, r, q, s, character;
    std::optional<std::string> kind, form, lambda;
};

long need(std::optional<long> const& v, char const* flag)
{
    if (!v)
        throw UsageError(std::string("this quantity needs ") + flag);
    return *v;
}

int dimension_or_r(ValueParams const& p, bool even)
{
    if (p.n) {
        if (even && *p.n % 2 != 0)
            throw UsageError("--n must be even for this quantity");
        return static_cast<int>(even ? *p.n / 2 : *p.n);
    }
    if (p.r && even)
        return static_cast<int>(*p.r);
    throw UsageError(even ? "this quantity needs --n or --r" : "this quantity needs --n");
}

Rational parse_rational(std::string const& text)
{
    try {
        return Rational::parse(text);
    } catch (std::exception const&) {
        throw UsageError("cannot parse rational '" + text + "'");
    }
}

LambdaKind parse_kind(std::optional<std::string> const& k)
{
    if (!k)
        throw UsageError("lambda needs --kind plain|prime|bar");
    if (*k == "plain") return LambdaKind::Plain;
    if (*k == "prime") return LambdaKind::Prime;
    if (*k == "bar") return LambdaKind::Bar;
    throw UsageError("unknown lambda kind '" + *k + "'");
}

IndexForm parse_form(std::optional<std::string> const& f)
{
    if (!f)
        throw UsageError("index needs --form");
    if (*f == "br-hyperspecial") return IndexForm::BrHyperspecial;
    if (*f == "br-combined") return IndexForm::BrCombined;
    if (*f == "dr-odd-combined") return IndexForm::DrOddCombined;
    if (*f == "2dr") return IndexForm::TwoDr;
    if (*f == "br-minus1") return IndexForm::BrMinus1;
    throw UsageError("unknown index form '" + *f + "'");
}

Row pi_scaled_row(std::optional<int> dim, std::string const& name, PiScaled const& x,
                  mpfr_prec_t prec)
{
    std::string e = std::to_string(x.pi_exponent());
    Row row = exact_row(dim, name + "[coefficient of pi^" + e + "]", x.coefficient(), prec);
    row.value = pi_scaled_eval(x, prec);
    row.exact_text = exact_string(x.coefficient()) + "*pi^" + e;
    return row;
}

int cmd_value(Settings const& s, std::string const& quantity, ValueParams const& p,
              std::ostream& out)
{
    mpfr_prec_t prec = s.ctx.precision;
    auto positive = [](long v, char const* flag) {
        if (v < 1)
            throw UsageError(std::string(flag) + " must be positive");
        return static_cast<unsigned>(v);
    };
    auto numeric = [&](auto&& f) { return with_escalation(s.ctx, f); };

    std::vector<Row> rows;
    if (quantity == "bernoulli") {
        long n = need(p.n, "--n");
        if (n < 0)
            throw UsageError("--n must be >= 0");
        rows.push_back(exact_row(std::nullopt, "bernoulli", bernoulli(static_cast<unsigned>(n)), prec));
    } else if (quantity == "generalized-bernoulli") {
        unsigned n = positive(need(p.n, "--n"), "--n");
        long d = need(p.character, "--character");
        if (d != 5 && d != -3)
            throw UsageError("--character must be 5 or -3");
        rows.push_back(exact_row(std::nullopt, "generalized_bernoulli",
                                 generalized_bernoulli(n, kronecker_character(d)), prec));
    } else if (quantity == "zeta-neg") {
        unsigned j = positive(need(p.j, "--j"), "--j");
        rows.push_back(exact_row(std::nullopt, "zeta_neg", zeta_neg(j), prec));
    } else if (quantity == "zeta-k-neg") {
        unsigned j = positive(need(p.j, "--j"), "--j");
        rows.push_back(exact_row(std::nullopt, "zeta_k_neg", dedekind_zeta_neg_quad(j), prec));
    } else if (quantity == "zeta" || quantity == "zeta-k") {
        long sv = need(p.s, "--s");
        if (sv < 2)
            throw UsageError("--s must be >= 2");
        Ball v = numeric([&](NumericContext const& c) {
            return quantity == "zeta" ? zeta_numeric(Rational(sv), c.precision)
                                      : zeta_k_numeric(Rational(sv), c.precision);
        });
        rows.push_back(ball_row(std::nullopt, quantity == "zeta" ? "zeta" : "zeta_k", v));
    } else if (quantity == "l-rel") {
        long sv = need(p.s, "--s");
        if (sv < 3)
            throw UsageError("--s must be >= 3");
        Ball v = numeric([&](NumericContext const& c) {
            return L_rel_numeric(sv, c.precision, c.l_mode, c.prime_cutoff);
        });
        rows.push_back(ball_row(std::nullopt, "l_rel", v));
    } else if (quantity == "chi-noncompact") {
        int r = dimension_or_r(p, true);
        if (r < 2)
            throw UsageError("needs n >= 4");
        rows.push_back(exact_row(2 * r, "chi_noncompact", euler_char_noncompact_even(r), prec));
    } else if (quantity == "chi-compact") {
        int r = dimension_or_r(p, true);
        if (r < 2)
            throw UsageError("needs n >= 4");
        std::optional<Rational> lam;
        if (p.lambda) {
            lam = parse_rational(*p.lambda);
            if (lam->sign() <= 0)
                throw UsageError("--lambda must be positive");
        }
        Rational chi = numeric([&](NumericContext const& c) {
            return euler_char_compact_even(r, lam, c.precision);
        });
        rows.push_back(exact_row(2 * r, "chi_compact", chi, prec));
    } else if (quantity == "vol-noncompact") {
        int n = static_cast<int>(need(p.n, "--n"));
        if (n < 4)
            throw UsageError("--n must be >= 4");
        rows.push_back(ball_row(n, "vol_noncompact", numeric([&](NumericContext const& c) {
                                    return vol_noncompact(n, c.precision);
                                })));
    } else if (quantity == "vol-compact") {
        int n = static_cast<int>(need(p.n, "--n"));
        if (n < 4)
            throw UsageError("--n must be >= 4");
        Ball v = numeric([&](NumericContext const& c) {
            return n % 2 == 0 ? vol_compact_even(n, c.precision) : vol_compact_odd(n, c);
        });
        rows.push_back(ball_row(n, "vol_compact", v));
    } else if (quantity == "c-constant") {
        long r = need(p.r, "--r");
        if (r < 1)
            throw UsageError("--r must be >= 1");
        rows.push_back(pi_scaled_row(std::nullopt, "c_constant", c_constant(static_cast<int>(r)), prec));
    } else if (quantity == "sphere-volume") {
        long n = need(p.n, "--n");
        if (n < 2)
            throw UsageError("--n must be >= 2");
        rows.push_back(pi_scaled_row(static_cast<int>(n), "sphere_volume",
                                     sphere_volume_exact(static_cast<int>(n)), prec));
    } else if (quantity == "lambda") {
        LambdaKind kind = parse_kind(p.kind);
        long q = need(p.q, "--q"), r = need(p.r, "--r");
        if (q < 2 || r < 1)
            throw UsageError("lambda needs --q >= 2 and --r >= 1");
        rows.push_back(exact_row(std::nullopt, "lambda", lambda(kind, q, static_cast<int>(r)), prec));
    } else if (quantity == "index") {
        IndexForm form = parse_form(p.form);
        long q = need(p.q, "--q"), r = need(p.r, "--r");
        if (q < 2 || r < 2)
            throw UsageError("index needs --q >= 2 and --r >= 2");
        rows.push_back(exact_row(std::nullopt, "index",
                                 Rational(parahoric_index(form, q, static_cast<int>(r))), prec));
    } else if (quantity == "suborbifold-chi") {
        rows.push_back(exact_row(30, "chi_suborbifold", euler_char_suborbifold_30(), prec));
    } else {
        throw UsageError("unknown quantity '" + quantity + "'");
    }
    write_rows(out, s, rows);
    return kExitVerified;
}

template <class E>
E parse_choice(std::string const& text, std::vector<std::pair<std::string, E>> const& choices,
               char const* what)
{
    for (auto const& [name, value] : choices)
        if (name == text)
            return value;
    throw UsageError(std::string("unknown ") + what + " '" + text + "'");
}

} // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and rigorous volumes of small arithmetic hyperbolic manifolds and orbifolds",
                 "hypvol"};
    app.require_subcommand(1);
    app.fallthrough();

    long precision = kDefaultPrecision;
    long max_precision = kMaxPrecision;
    unsigned long prime_cutoff = kDefaultPrimeCutoff;
    std::string format = "text", l_mode = "exact", parity = "denominator-only", rounding = "truncate";
    int digits = 20;

    auto* prec_opt = app.add_option("--precision", precision, "Starting working precision in bits")
                         ->envname("HYPVOL_PRECISION")
                         ->check(CLI::Range(64L, 1L << 20));
    auto* max_opt = app.add_option("--max-precision", max_precision,
                                   "Escalation ceiling in bits (default 4096, or --precision if that is given)")
                        ->envname("HYPVOL_MAX_PRECISION")
                        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--prime-cutoff", prime_cutoff, "Largest prime in Euler products")
        ->envname("HYPVOL_PRIME_CUTOFF")
        ->check(CLI::Range(2UL, 100000000UL));
    app.add_option("--format", format, "text, json or csv")->envname("HYPVOL_FORMAT");
    app.add_option("--l-mode", l_mode, "exact or lower-bound")->envname("HYPVOL_L_MODE");
    app.add_option("--parity-rule", parity, "denominator-only or force-even")
        ->envname("HYPVOL_PARITY_RULE");
    app.add_option("--rounding", rounding, "Volume table digits: truncate or half-even")
        ->envname("HYPVOL_ROUNDING");
    app.add_option("--digits", digits, "Significant digits of printed midpoints")
        ->envname("HYPVOL_DIGITS")
        ->check(CLI::Range(1, 10000));

    std::string table_kind, table_range;
    auto* table = app.add_subcommand("table", "Print the Euler characteristic or volume table of M^n");
    table->add_option("kind", table_kind, "euler or volume")->required();
    table->add_option("range", table_range, "Dimensions a..b within 4..60");

    std::optional<int> verify_n;
    bool verify_all = false;
    auto* verify = app.add_subcommand("verify", "Run the comparison argument for dimension n >= 30");
    verify->add_option("n", verify_n, "Dimension");
    verify->add_flag("--all", verify_all, "All dimensions 30..60");

    std::string quantity;
    ValueParams vp;
    auto* value = app.add_subcommand("value", "Print a single exact or rigorous value");
    value->add_option("quantity", quantity,
                      "bernoulli, generalized-bernoulli, zeta-neg, zeta-k-neg, zeta, zeta-k, l-rel, "
                      "chi-noncompact, chi-compact, vol-noncompact, vol-compact, c-constant, "
                      "sphere-volume, lambda, index, suborbifold-chi")
        ->required();
    value->add_option("--n", vp.n);
    value->add_option("--j", vp.j);
    value->add_option("--r", vp.r);
    value->add_option("--q", vp.q);
    value->add_option("--s", vp.s);
    value->add_option("--character", vp.character, "5 or -3");
    value->add_option("--kind", vp.kind, "plain, prime or bar");
    value->add_option("--form", vp.form, "br-hyperspecial, br-combined, dr-odd-combined, 2dr, br-minus1");
    value->add_option("--lambda", vp.lambda, "Rational lambda factor, e.g. 30517578124/2");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        Settings s;
        s.ctx.precision = precision;
        if (max_opt->count() > 0)
            s.ctx.max_precision = max_precision;
        else if (prec_opt->count() > 0)
            s.ctx.max_precision = precision;
        if (s.ctx.max_precision < s.ctx.precision)
            throw UsageError("--max-precision is below --precision");
        s.ctx.prime_cutoff = prime_cutoff;
        s.ctx.l_mode = parse_choice<LMode>(
            l_mode, {{"exact", LMode::Exact}, {"lower-bound", LMode::FixedLowerBound}}, "l-mode");
        s.parity = parse_choice<ParityRule>(
            parity, {{"denominator-only", ParityRule::DenominatorOnly}, {"force-even", ParityRule::ForceEven}},
            "parity rule");
        s.format = parse_choice<Format>(
            format, {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}, "format");
        s.rounding = parse_choice<Rounding>(
            rounding, {{"truncate", Rounding::Truncate}, {"half-even", Rounding::HalfEven}}, "rounding");
        s.digits = digits;

        if (*table) {
            if (table_kind != "euler" && table_kind != "volume")
                throw UsageError("table kind must be euler or volume");
            std::string range = table_range.empty() ? (table_kind == "euler" ? "4..18" : "4..20")
                                                    : table_range;
            return cmd_table(s, table_kind, range, out);
        }
        if (*verify)
            return cmd_verify(s, verify_n, verify_all, out, err);
        return cmd_value(s, quantity, vp, out);
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (PrecisionError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecision;
    } catch (ConsistencyError const& e) {
        err << "consistency check failed: " << e.what() << '\n';
        return kExitUndecided;
    } catch (std::invalid_argument const& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace hypvol
