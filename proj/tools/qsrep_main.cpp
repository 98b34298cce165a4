// qsrep command-line front end. Every subcommand is a thin adapter over the
// shared-library C API: parse arguments, call the operation, print a JSON
// envelope {"command", "inputs", "result", "backend"} (or CSV for tabular
// output). Exit codes: 0 success, 1 domain error, 2 argument error.

#include "qsrep.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CApiError : std::runtime_error {
    qsr_status status;
    CApiError(qsr_status st, const std::string& message)
        : std::runtime_error(message), status(st) {}
};

// `flag` names the argument a failure should be attributed to.
void check(qsr_status st, const char* flag = nullptr) {
    if (st == QSR_OK) return;
    std::string message = qsr_last_error_message();
    if (flag) message = std::string(flag) + ": " + message;
    throw CApiError(st, message);
}

struct SystemDeleter {
    void operator()(qsr_system* s) const { qsr_system_free(s); }
};
struct StreamDeleter {
    void operator()(qsr_stream* s) const { qsr_stream_free(s); }
};
using SystemPtr = std::unique_ptr<qsr_system, SystemDeleter>;
using StreamPtr = std::unique_ptr<qsr_stream, StreamDeleter>;

SystemPtr make_system(const std::string& weights_csv) {
    qsr_system* sys = nullptr;
    check(qsr_system_new(weights_csv.c_str(), &sys), "--q");
    return SystemPtr(sys);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    qsr_string_free(s);
    return out;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(item);
    return out;
}

bool rational_form(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool seen_slash = false, seen_digit = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            seen_digit = true;
        } else {
            return false;
        }
    }
    return seen_digit;
}

std::vector<int32_t> parse_digits(const std::string& csv, const std::string& flag) {
    std::vector<int32_t> out;
    for (const auto& tok : split_csv(csv)) {
        try {
            out.push_back(static_cast<int32_t>(std::stol(tok)));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse digit '" + tok + "'");
        }
    }
    return out;
}

std::vector<int64_t> parse_positions(const std::string& csv, const std::string& flag) {
    std::vector<int64_t> out;
    for (const auto& tok : split_csv(csv)) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse position '" + tok + "'");
        }
    }
    return out;
}

double parse_number(const std::string& tok, const std::string& flag) {
    if (rational_form(tok)) {
        auto slash = tok.find('/');
        if (slash == std::string::npos) return std::stod(tok);
        double num = std::stod(tok.substr(0, slash));
        double den = std::stod(tok.substr(slash + 1));
        return num / den;
    }
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "cannot parse number '" + tok + "'");
    }
}

std::vector<double> parse_numbers(const std::string& csv, const std::string& flag) {
    std::vector<double> out;
    for (const auto& tok : split_csv(csv)) out.push_back(parse_number(tok, flag));
    return out;
}

// "c0,c1,c2=b"
void parse_constraint(const std::string& text, std::vector<double>& coeffs, double& rhs) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw CLI::ValidationError("--constraint", "expected \"c0,c1,c2=b\"");
    coeffs = parse_numbers(text.substr(0, eq), "--constraint");
    rhs = parse_number(text.substr(eq + 1), "--constraint");
}

json system_json(const qsr_system* sys) {
    json q = json::array();
    int32_t s = qsr_system_size(sys);
    bool exact = qsr_system_is_exact(sys) != 0;
    for (int32_t i = 0; i < s; ++i) {
        if (exact) {
            char* str = nullptr;
            check(qsr_system_weight_str(sys, i, &str));
            q.push_back(take_string(str));
        } else {
            double w = 0;
            check(qsr_system_weight(sys, i, &w));
            q.push_back(w);
        }
    }
    return json{{"q", q}};
}

struct Output {
    std::string format = "json"; // json | csv
    void emit(const std::string& command, const json& inputs, const json& result,
              bool exact_backend, const std::string& csv_text = "") const {
        if (format == "csv") {
            if (!csv_text.empty()) {
                std::cout << csv_text;
            } else {
                for (auto it = result.begin(); it != result.end(); ++it)
                    std::cout << it.key() << "," << it.value().dump() << "\n";
            }
            return;
        }
        json env{{"command", command},
                 {"inputs", inputs},
                 {"result", result},
                 {"backend", exact_backend ? "exact" : "float"}};
        std::cout << env.dump(2) << "\n";
    }
};

json opt_result_json(const qsr_opt_result& r, const std::string& method) {
    json out{{"tau", {r.tau[0], r.tau[1], r.tau[2]}},
             {"dim", r.dim},
             {"method", method},
             {"stationarity_residual", r.stationarity_residual},
             {"constraint_residual", r.constraint_residual}};
    if (!std::isnan(r.stationarity_root)) {
        out["stationarity_root"] = r.stationarity_root;
        out["method_gap"] = r.method_gap;
    }
    return out;
}

json dim_result_json(const qsr_dim_result& r) {
    return json{{"value", r.value},
                {"method", qsr_dim_method_name(r.method)},
                {"residual", r.residual}};
}

// Named stream constructions shared by `construct`, `stats`, `oscillation`.
struct ConstructArgs {
    std::string name;
    int32_t c = 0, d = 1, s = 2;
    int64_t k = 1;
    // Free digits of the block construction come from a fixed default seed;
    // --seed deliberately affects only the simulate subcommands.
    static constexpr uint64_t free_seed = 0;
};

StreamPtr make_construct(const ConstructArgs& a) {
    qsr_stream* st = nullptr;
    if (a.name == "oscillating") {
        check(qsr_stream_oscillating(a.c, a.d, a.s, &st));
    } else if (a.name == "ak") {
        check(qsr_stream_ak(a.k, a.s, ConstructArgs::free_seed, &st));
    } else if (a.name == "champernowne") {
        check(qsr_stream_champernowne(&st));
    } else if (a.name == "copeland-erdos") {
        check(qsr_stream_copeland_erdos(&st));
    } else if (a.name == "cyclic") {
        std::vector<int32_t> period(static_cast<std::size_t>(a.s));
        for (int32_t i = 0; i < a.s; ++i) period[static_cast<std::size_t>(i)] = i;
        check(qsr_stream_periodic(nullptr, 0, period.data(), a.s, a.s, &st));
    } else {
        throw CLI::ValidationError("construct", "unknown construction '" + a.name + "'");
    }
    return StreamPtr(st);
}

json construct_inputs(const ConstructArgs& a) {
    json in{{"name", a.name}};
    if (a.name == "oscillating") {
        in["c"] = a.c;
        in["d"] = a.d;
        in["s"] = a.s;
    } else if (a.name == "ak") {
        in["k"] = a.k;
        in["s"] = a.s;
    } else if (a.name == "cyclic") {
        in["s"] = a.s;
    }
    return in;
}

// Lets global flags (--format, --max-digits) appear after a subcommand name.
void enable_fallthrough(CLI::App* app) {
    app->fallthrough();
    for (auto* sub : app->get_subcommands([](const CLI::App*) { return true; }))
        enable_fallthrough(sub);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsrep: weighted radix representations, digit statistics, "
                 "fractal dimensions, and Monte Carlo experiments"};
    app.require_subcommand(1);

    Output out;
    int64_t max_digits = int64_t{1} << 22;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--max-digits", max_digits,
                   "Cap on materialized digit counts")
        ->capture_default_str();

    auto guard_digits = [&max_digits](int64_t n, const std::string& flag) {
        if (n < 0) throw CLI::ValidationError(flag, "must be nonnegative");
        if (n > max_digits)
            throw CLI::ValidationError(flag, "exceeds --max-digits (" +
                                                 std::to_string(max_digits) + ")");
    };

    // ---- encode ----
    {
        auto* cmd = app.add_subcommand("encode", "First n digits of x");
        auto q = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        auto n = std::make_shared<int64_t>(16);
        cmd->add_option("--q", *q, "Weights, e.g. 1/3,1/3,1/3")->required();
        cmd->add_option("--x", *x, "Point in [0,1): p/q or decimal")->required();
        cmd->add_option("--n", *n, "Digit count")->capture_default_str();
        cmd->callback([&, q, x, n] {
            guard_digits(*n, "--n");
            auto sys = make_system(*q);
            std::vector<int32_t> digits(static_cast<std::size_t>(*n));
            check(qsr_encode(sys.get(), x->c_str(), static_cast<int32_t>(*n),
                             digits.data()), "--x");
            bool exact = qsr_system_is_exact(sys.get()) && rational_form(*x);
            json inputs{{"q", *q}, {"x", *x}, {"n", *n}};
            inputs["system"] = system_json(sys.get());
            out.emit("encode", inputs, json{{"digits", digits}}, exact);
        });
    }

    // ---- decode ----
    {
        auto* cmd = app.add_subcommand("decode", "Value of a digit word or periodic expansion");
        auto q = std::make_shared<std::string>();
        auto digits = std::make_shared<std::string>();
        auto pre = std::make_shared<std::string>();
        auto per = std::make_shared<std::string>();
        cmd->add_option("--q", *q, "Weights")->required();
        auto* digits_opt = cmd->add_option("--digits", *digits, "Finite word, e.g. 2,0");
        cmd->add_option("--preperiod", *pre, "Preperiod digits (may be empty)");
        auto* period_opt = cmd->add_option("--period", *per, "Period digits");
        cmd->callback([&, q, digits, pre, per, digits_opt, period_opt] {
            auto sys = make_system(*q);
            bool exact = qsr_system_is_exact(sys.get()) != 0;
            json inputs{{"q", *q}};
            inputs["system"] = system_json(sys.get());
            double value = 0;
            char* exact_str = nullptr;
            if (period_opt->count() > 0) {
                auto pd = pre->empty() ? std::vector<int32_t>{}
                                       : parse_digits(*pre, "--preperiod");
                auto pp = parse_digits(*per, "--period");
                check(qsr_decode_periodic(sys.get(), pd.data(),
                                          static_cast<int32_t>(pd.size()), pp.data(),
                                          static_cast<int32_t>(pp.size()), &value,
                                          &exact_str), "--period");
                inputs["preperiod"] = pd;
                inputs["period"] = pp;
            } else if (digits_opt->count() > 0) {
                auto w = digits->empty() ? std::vector<int32_t>{}
                                         : parse_digits(*digits, "--digits");
                check(qsr_decode_word(sys.get(), w.data(),
                                      static_cast<int32_t>(w.size()), &value,
                                      &exact_str), "--digits");
                inputs["digits"] = w;
            } else {
                throw CLI::ValidationError("decode", "need --digits or --period");
            }
            json result{{"value", value}};
            if (exact_str) result["exact"] = take_string(exact_str);
            out.emit("decode", inputs, result, exact);
        });
    }

    // ---- cylinder ----
    {
        auto* cmd = app.add_subcommand("cylinder", "Interval of numbers starting with a word");
        auto q = std::make_shared<std::string>();
        auto digits = std::make_shared<std::string>();
        cmd->add_option("--q", *q, "Weights")->required();
        cmd->add_option("--digits", *digits, "Prefix word")->required();
        cmd->callback([&, q, digits] {
            auto sys = make_system(*q);
            auto w = parse_digits(*digits, "--digits");
            double left = 0, length = 0;
            char* left_exact = nullptr;
            char* length_exact = nullptr;
            check(qsr_cylinder(sys.get(), w.data(), static_cast<int32_t>(w.size()),
                               &left, &length, &left_exact, &length_exact), "--digits");
            json result{{"left", left}, {"length", length}};
            if (left_exact) result["left_exact"] = take_string(left_exact);
            if (length_exact) result["length_exact"] = take_string(length_exact);
            json inputs{{"q", *q}, {"digits", w}};
            inputs["system"] = system_json(sys.get());
            out.emit("cylinder", inputs, result,
                     qsr_system_is_exact(sys.get()) != 0);
        });
    }

    // ---- stats ----
    {
        auto* cmd = app.add_subcommand(
            "stats", "Digit counts, frequencies and running means");
        auto digits = std::make_shared<std::string>();
        auto pre = std::make_shared<std::string>();
        auto per = std::make_shared<std::string>();
        auto construct = std::make_shared<ConstructArgs>();
        auto n = std::make_shared<int64_t>(0);
        auto checkpoints = std::make_shared<std::string>();
        auto s_flag = std::make_shared<int32_t>(0);
        cmd->add_option("--digits", *digits, "Explicit digit list");
        cmd->add_option("--preperiod", *pre, "Preperiod of an exact periodic number");
        cmd->add_option("--period", *per, "Period of an exact periodic number");
        cmd->add_option("--construct", construct->name,
                        "Named stream: oscillating|ak|champernowne|copeland-erdos|cyclic");
        cmd->add_option("--c", construct->c, "Oscillating digit c");
        cmd->add_option("--d", construct->d, "Oscillating digit d");
        cmd->add_option("--s", *s_flag, "Alphabet size");
        cmd->add_option("--k", construct->k, "Block construction parameter");
        cmd->add_option("--n", *n, "Number of stream digits to tally");
        cmd->add_option("--checkpoints", *checkpoints,
                        "Positions for a running-mean series (CSV output: "
                        "position,mean,freq_0..freq_{s-1})");
        cmd->callback([&, digits, pre, per, construct, n, checkpoints, s_flag] {
            // exact periodic path
            if (!per->empty()) {
                int32_t s = *s_flag;
                auto pp = parse_digits(*per, "--period");
                auto pd = pre->empty() ? std::vector<int32_t>{}
                                       : parse_digits(*pre, "--preperiod");
                if (s == 0) {
                    for (int32_t dgt : pp) s = std::max(s, dgt + 1);
                    for (int32_t dgt : pd) s = std::max(s, dgt + 1);
                    s = std::max(s, 2);
                }
                json freqs = json::array();
                json freq_values = json::array();
                for (int32_t i = 0; i < s; ++i) {
                    int64_t num = 0, den = 1;
                    check(qsr_periodic_frequency(pd.data(), static_cast<int32_t>(pd.size()),
                                                 pp.data(), static_cast<int32_t>(pp.size()),
                                                 s, i, &num, &den), "--period");
                    freqs.push_back(den == 1 ? std::to_string(num)
                                             : std::to_string(num) + "/" + std::to_string(den));
                    freq_values.push_back(static_cast<double>(num) / static_cast<double>(den));
                }
                int64_t mnum = 0, mden = 1;
                check(qsr_periodic_mean(pd.data(), static_cast<int32_t>(pd.size()),
                                        pp.data(), static_cast<int32_t>(pp.size()), s,
                                        &mnum, &mden), "--period");
                json result{{"frequencies", freqs},
                            {"frequency_values", freq_values},
                            {"mean", mden == 1 ? std::to_string(mnum)
                                               : std::to_string(mnum) + "/" + std::to_string(mden)},
                            {"mean_value", static_cast<double>(mnum) / static_cast<double>(mden)}};
                json inputs{{"preperiod", pd}, {"period", pp}, {"s", s}};
                out.emit("stats", inputs, result, true);
                return;
            }

            // stream path: explicit digits or a named construction
            StreamPtr stream;
            json inputs;
            if (!digits->empty()) {
                auto w = parse_digits(*digits, "--digits");
                int32_t s = *s_flag;
                if (s == 0) {
                    for (int32_t dgt : w) s = std::max(s, dgt + 1);
                    s = std::max(s, 2);
                }
                qsr_stream* st = nullptr;
                check(qsr_stream_from_digits(w.data(), static_cast<int32_t>(w.size()), s, &st));
                stream.reset(st);
                if (*n == 0) *n = static_cast<int64_t>(w.size());
                inputs = json{{"digits", w}, {"s", s}};
            } else if (!construct->name.empty()) {
                if (*s_flag != 0) construct->s = *s_flag;
                stream = make_construct(*construct);
                inputs = construct_inputs(*construct);
            } else {
                throw CLI::ValidationError(
                    "stats", "need --digits, --period or --construct");
            }

            int32_t s = qsr_stream_alphabet(stream.get());
            if (!checkpoints->empty()) {
                auto pos = parse_positions(*checkpoints, "--checkpoints");
                for (int64_t p : pos) guard_digits(p, "--checkpoints");
                std::vector<int64_t> sums(pos.size());
                std::vector<int64_t> counts(pos.size() * static_cast<std::size_t>(s));
                check(qsr_stream_counts_at(stream.get(), pos.data(),
                                           static_cast<int32_t>(pos.size()),
                                           sums.data(), counts.data()));
                json series = json::array();
                std::ostringstream csv;
                csv << "position,mean";
                for (int32_t i = 0; i < s; ++i) csv << ",freq_" << i;
                csv << "\n";
                for (std::size_t i = 0; i < pos.size(); ++i) {
                    double mean = static_cast<double>(sums[i]) / static_cast<double>(pos[i]);
                    json freqs = json::array();
                    csv << pos[i] << "," << mean;
                    for (int32_t dgt = 0; dgt < s; ++dgt) {
                        double f = static_cast<double>(counts[i * static_cast<std::size_t>(s) +
                                                              static_cast<std::size_t>(dgt)]) /
                                   static_cast<double>(pos[i]);
                        freqs.push_back(f);
                        csv << "," << f;
                    }
                    csv << "\n";
                    series.push_back(json{{"position", pos[i]}, {"mean", mean}, {"freqs", freqs}});
                }
                inputs["checkpoints"] = pos;
                out.emit("stats", inputs, json{{"series", series}}, false, csv.str());
                return;
            }

            if (*n == 0) *n = 1024;
            guard_digits(*n, "--n");
            std::vector<int64_t> counts(static_cast<std::size_t>(s));
            int64_t digit_sum = 0;
            check(qsr_stream_stats(stream.get(), *n, counts.data(), &digit_sum));
            json freqs = json::array();
            for (int32_t i = 0; i < s; ++i)
                freqs.push_back(static_cast<double>(counts[static_cast<std::size_t>(i)]) /
                                static_cast<double>(*n));
            json result{{"n", *n},
                        {"counts", counts},
                        {"freqs", freqs},
                        {"mean", static_cast<double>(digit_sum) / static_cast<double>(*n)}};
            inputs["n"] = *n;
            out.emit("stats", inputs, result, false);
        });
    }

    // ---- oscillation ----
    {
        auto* cmd = app.add_subcommand(
            "oscillation",
            "Partial means of the oscillating number along two checkpoint families");
        auto construct = std::make_shared<ConstructArgs>();
        construct->name = "oscillating";
        auto rounds = std::make_shared<int32_t>(12);
        auto list_a = std::make_shared<std::string>();
        auto list_b = std::make_shared<std::string>();
        cmd->add_option("--c", construct->c, "Digit c")->capture_default_str();
        cmd->add_option("--d", construct->d, "Digit d")->capture_default_str();
        cmd->add_option("--s", construct->s, "Alphabet size")->capture_default_str();
        cmd->add_option("--rounds", *rounds, "Checkpoint rounds (default families)")
            ->capture_default_str();
        cmd->add_option("--checkpoints-a", *list_a, "Explicit first family");
        cmd->add_option("--checkpoints-b", *list_b, "Explicit second family");
        cmd->callback([&, construct, rounds, list_a, list_b] {
            auto stream = make_construct(*construct);
            std::vector<int64_t> a, b;
            if (!list_a->empty() || !list_b->empty()) {
                a = parse_positions(*list_a, "--checkpoints-a");
                b = parse_positions(*list_b, "--checkpoints-b");
            } else {
                if (*rounds < 3)
                    throw CLI::ValidationError("--rounds", "need at least 3");
                for (int32_t k = 1; k <= *rounds; ++k) {
                    int64_t pos = 0;
                    check(qsr_oscillating_d_run_end(k, &pos));
                    a.push_back(pos);
                    check(qsr_oscillating_round_end(k, &pos));
                    b.push_back(pos);
                }
            }
            double mean_a = 0, mean_b = 0, gap = 0;
            check(qsr_oscillation_report(stream.get(), a.data(),
                                         static_cast<int32_t>(a.size()), b.data(),
                                         static_cast<int32_t>(b.size()), &mean_a,
                                         &mean_b, &gap));
            json inputs = construct_inputs(*construct);
            inputs["checkpoints_a"] = a;
            inputs["checkpoints_b"] = b;
            json result{{"limit_estimate_a", mean_a},
                        {"limit_estimate_b", mean_b},
                        {"gap", gap}};
            out.emit("oscillation", inputs, result, false);
        });
    }

    // ---- dim ----
    {
        auto* dim = app.add_subcommand("dim", "Fractal dimensions");
        dim->require_subcommand(1);

        auto* be = dim->add_subcommand("be", "Frequency-set dimension");
        auto beq = std::make_shared<std::string>();
        auto betau = std::make_shared<std::string>();
        be->add_option("--q", *beq, "Weights")->required();
        be->add_option("--tau", *betau, "Frequency vector")->required();
        be->callback([&, beq, betau] {
            auto sys = make_system(*beq);
            auto tau = parse_numbers(*betau, "--tau");
            qsr_dim_result r{};
            check(qsr_be_dimension(sys.get(), tau.data(),
                                   static_cast<int32_t>(tau.size()), &r), "--tau");
            json inputs{{"q", *beq}, {"tau", tau}};
            inputs["system"] = system_json(sys.get());
            out.emit("dim be", inputs, dim_result_json(r), false);
        });

        auto* moran = dim->add_subcommand("moran", "Digit-restricted Cantor set dimension");
        auto mq = std::make_shared<std::string>();
        auto msub = std::make_shared<std::string>();
        moran->add_option("--q", *mq, "Weights")->required();
        moran->add_option("--subset", *msub, "Allowed digits, e.g. 0,2")->required();
        moran->callback([&, mq, msub] {
            auto sys = make_system(*mq);
            auto sub = parse_digits(*msub, "--subset");
            qsr_dim_result r{};
            check(qsr_moran_dimension(sys.get(), sub.data(),
                                      static_cast<int32_t>(sub.size()), &r), "--subset");
            json inputs{{"q", *mq}, {"subset", sub}};
            inputs["system"] = system_json(sys.get());
            out.emit("dim moran", inputs, dim_result_json(r), false);
        });

        auto* ak = dim->add_subcommand("ak", "Dimension k/(k+1) of the block family");
        auto kval = std::make_shared<int64_t>(1);
        ak->add_option("--k", *kval, "Family parameter")->required();
        ak->callback([&, kval] {
            int64_t num = 0, den = 1;
            check(qsr_ak_dimension(*kval, &num, &den), "--k");
            json result{{"value", static_cast<double>(num) / static_cast<double>(den)},
                        {"exact", std::to_string(num) + "/" + std::to_string(den)},
                        {"method", "closed_form"},
                        {"residual", 0.0}};
            out.emit("dim ak", json{{"k", *kval}}, result, true);
        });

        auto* lb = dim->add_subcommand("level-bound",
                                       "Lower bound for the mean-level-set dimension");
        auto lq = std::make_shared<std::string>();
        auto ltheta = std::make_shared<std::string>();
        lb->add_option("--q", *lq, "Weights")->required();
        lb->add_option("--theta", *ltheta, "Target digit mean")->required();
        lb->callback([&, lq, ltheta] {
            auto sys = make_system(*lq);
            double theta = parse_number(*ltheta, "--theta");
            qsr_dim_result r{};
            std::vector<double> tau(static_cast<std::size_t>(qsr_system_size(sys.get())));
            check(qsr_level_set_lower_bound(sys.get(), theta, &r, tau.data()), "--theta");
            json result = dim_result_json(r);
            result["tau"] = tau;
            json inputs{{"q", *lq}, {"theta", theta}};
            inputs["system"] = system_json(sys.get());
            out.emit("dim level-bound", inputs, result, false);
        });
    }

    // ---- opt ----
    {
        auto* opt = app.add_subcommand("opt", "Constrained dimension maximization");
        opt->require_subcommand(1);

        opt->add_subcommand("m0", "Digit mean equals frequency of digit 0")
            ->callback([&] {
                qsr_opt_result r{};
                check(qsr_opt_m0(&r));
                out.emit("opt m0", json::object(),
                         opt_result_json(r, "cardano+golden_section"), false);
            });
        opt->add_subcommand("m1", "Digit mean equals frequency of digit 1")
            ->callback([&] {
                qsr_opt_result r{};
                const char* note = nullptr;
                check(qsr_opt_m1(&r, &note));
                json result = opt_result_json(r, "closed_form");
                result["note"] = note ? note : "";
                out.emit("opt m1", json::object(), result, false);
            });
        opt->add_subcommand("m2", "Digit mean equals frequency of digit 2")
            ->callback([&] {
                qsr_opt_result r{};
                check(qsr_opt_m2(&r));
                out.emit("opt m2", json::object(), opt_result_json(r, "closed_form"),
                         false);
            });

        auto* con = opt->add_subcommand("constrained",
                                        "Maximize on a simplex slice c . tau = b");
        auto cq = std::make_shared<std::string>();
        auto ctext = std::make_shared<std::string>();
        con->add_option("--q", *cq, "Weights")->required();
        con->add_option("--constraint", *ctext, "\"c0,c1,c2=b\"")->required();
        con->callback([&, cq, ctext] {
            auto sys = make_system(*cq);
            std::vector<double> coeffs;
            double rhs = 0;
            parse_constraint(*ctext, coeffs, rhs);
            qsr_opt_result r{};
            check(qsr_opt_constrained(sys.get(), coeffs.data(),
                                      static_cast<int32_t>(coeffs.size()), rhs, &r), "--constraint");
            json inputs{{"q", *cq}, {"coeffs", coeffs}, {"rhs", rhs}};
            inputs["system"] = system_json(sys.get());
            out.emit("opt constrained", inputs, opt_result_json(r, "golden_section"),
                     false);
        });
    }

    // ---- cubic ----
    {
        auto* cmd = app.add_subcommand("cubic", "Real roots of a cubic");
        auto coeffs = std::make_shared<std::string>();
        cmd->add_option("coeffs", *coeffs, "a,b,c,d of a*x^3+b*x^2+c*x+d")->required();
        cmd->callback([&, coeffs] {
            auto c = parse_numbers(*coeffs, "coeffs");
            if (c.size() != 4)
                throw CLI::ValidationError("coeffs", "need exactly 4 coefficients");
            double roots[3] = {0, 0, 0};
            double residuals[3] = {0, 0, 0};
            int32_t count = 0;
            check(qsr_solve_cubic(c[0], c[1], c[2], c[3], roots, residuals, &count));
            json jroots = json::array(), jres = json::array();
            for (int32_t i = 0; i < count; ++i) {
                jroots.push_back(roots[i]);
                jres.push_back(residuals[i]);
            }
            json result{{"roots", jroots}, {"residuals", jres}, {"count", count}};
            out.emit("cubic", json{{"coeffs", c}}, result, false);
        });
    }

    // ---- construct ----
    {
        auto* cmd = app.add_subcommand("construct", "Emit digits of a named construction");
        auto construct = std::make_shared<ConstructArgs>();
        auto n = std::make_shared<int64_t>(32);
        cmd->add_option("name", construct->name,
                        "oscillating|ak|champernowne|copeland-erdos|cyclic")
            ->required();
        cmd->add_option("--c", construct->c, "Oscillating digit c")->capture_default_str();
        cmd->add_option("--d", construct->d, "Oscillating digit d")->capture_default_str();
        cmd->add_option("--s", construct->s, "Alphabet size")->capture_default_str();
        cmd->add_option("--k", construct->k, "Block construction parameter")
            ->capture_default_str();
        cmd->add_option("--n", *n, "Digit count")->capture_default_str();
        cmd->callback([&, construct, n] {
            guard_digits(*n, "--n");
            auto stream = make_construct(*construct);
            std::vector<int32_t> digits(static_cast<std::size_t>(*n));
            check(qsr_stream_take(stream.get(), *n, digits.data()));
            json result{{"digits", digits}};
            if (construct->name == "cyclic") {
                json period = json::array();
                for (int32_t i = 0; i < construct->s; ++i) period.push_back(i);
                result["preperiod"] = json::array();
                result["period"] = period;
            }
            std::ostringstream csv;
            csv << "position,digit\n";
            for (std::size_t i = 0; i < digits.size(); ++i)
                csv << (i + 1) << "," << digits[i] << "\n";
            json inputs = construct_inputs(*construct);
            inputs["n"] = *n;
            out.emit("construct", inputs, result, false, csv.str());
        });
    }

    // ---- simulate ----
    {
        auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo experiments");
        sim->require_subcommand(1);

        auto* borel = sim->add_subcommand(
            "borel", "Digit-frequency concentration under Lebesgue sampling");
        auto bq = std::make_shared<std::string>();
        auto bn = std::make_shared<int64_t>(100000);
        auto btrials = std::make_shared<int64_t>(200);
        auto bseed = std::make_shared<uint64_t>(1);
        borel->add_option("--q", *bq, "Weights")->required();
        borel->add_option("--n", *bn, "Digits per trial")->capture_default_str();
        borel->add_option("--trials", *btrials, "Trial count")->capture_default_str();
        borel->add_option("--seed", *bseed, "Seed")->capture_default_str();
        borel->callback([&, bq, bn, btrials, bseed] {
            auto sys = make_system(*bq);
            std::vector<double> max_dev(static_cast<std::size_t>(*btrials));
            double pass = 0, mom = 0, expected = 0;
            check(qsr_borel_experiment(sys.get(), *bn, *btrials, *bseed,
                                       max_dev.data(), &pass, &mom, &expected));
            json config{{"q", *bq}, {"n", *bn}, {"trials", *btrials}, {"seed", *bseed}};
            config["system"] = system_json(sys.get());
            json result{{"config", config},
                        {"per_trial_max_dev", max_dev},
                        {"pass_fraction", pass},
                        {"mean_of_means", mom},
                        {"expected_mean", expected}};
            out.emit("simulate borel", config, result, false);
        });

        auto* md = sim->add_subcommand("mean-dist",
                                       "Histogram of the per-trial digit mean");
        auto mq = std::make_shared<std::string>();
        auto mmeasure = std::make_shared<std::string>();
        auto mn = std::make_shared<int64_t>(10000);
        auto mtrials = std::make_shared<int64_t>(1000);
        auto mseed = std::make_shared<uint64_t>(1);
        auto mbins = std::make_shared<int32_t>(40);
        md->add_option("--q", *mq, "Weights")->required();
        md->add_option("--measure", *mmeasure, "Digit measure (defaults to q)");
        md->add_option("--n", *mn, "Digits per trial")->capture_default_str();
        md->add_option("--trials", *mtrials, "Trial count")->capture_default_str();
        md->add_option("--seed", *mseed, "Seed")->capture_default_str();
        md->add_option("--bins", *mbins, "Histogram bins")->capture_default_str();
        md->callback([&, mq, mmeasure, mn, mtrials, mseed, mbins] {
            auto sys = make_system(*mq);
            std::vector<double> bin_left(static_cast<std::size_t>(*mbins));
            std::vector<int64_t> count(static_cast<std::size_t>(*mbins));
            double mean = 0, variance = 0;
            check(qsr_mean_distribution(sys.get(),
                                        mmeasure->empty() ? nullptr : mmeasure->c_str(),
                                        *mn, *mtrials, *mseed, *mbins, bin_left.data(),
                                        count.data(), &mean, &variance));
            json config{{"q", *mq}, {"n", *mn}, {"trials", *mtrials}, {"seed", *mseed},
                        {"bins", *mbins}};
            if (!mmeasure->empty()) config["measure"] = *mmeasure;
            config["system"] = system_json(sys.get());
            std::ostringstream csv;
            csv << "bin_left,count\n";
            for (std::size_t i = 0; i < bin_left.size(); ++i)
                csv << bin_left[i] << "," << count[i] << "\n";
            json result{{"config", config},
                        {"histogram", {{"bin_left", bin_left}, {"count", count}}},
                        {"mean", mean},
                        {"variance", variance}};
            out.emit("simulate mean-dist", config, result, false, csv.str());
        });
    }

    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const CApiError& e) {
        std::cerr << "qsrep: " << e.what() << " ["
                  << qsr_status_name(e.status) << "]\n";
        // unparseable arguments are argument errors; everything else is a
        // domain error
        return e.status == QSR_ERR_INVALID_ARGUMENT ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "qsrep: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
