// Copyright 2026 The eaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "eaqec/ebits.h"
#include "eaqec/error.h"
#include "eaqec/families.h"
#include "eaqec/lincode.h"
#include "json.hpp"

namespace eaqec::cli {

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConstraintViolation:
            return kConstraint;
        case ErrorKind::FormulaMismatch:
        case ErrorKind::DualityFailure:
            return kInternalMismatch;
        case ErrorKind::FieldMismatch:
        case ErrorKind::LengthMismatch:
        case ErrorKind::ShapeMismatch:
        case ErrorKind::Parse:
        case ErrorKind::NonPrime:
        case ErrorKind::UnsupportedSize:
        case ErrorKind::InvalidArgument:
        case ErrorKind::ZeroCode:
        case ErrorKind::DependentGenerators:
        case ErrorKind::LengthExceedsDegree:
            return kInputMismatch;
        case ErrorKind::Infeasible:
        case ErrorKind::BudgetExceeded:
            return kInfeasible;
        case ErrorKind::Cancelled:
            return kCancelled;
        default:
            return kFailure;
    }
}

void check_stop(const std::stop_token &stop) {
    if (stop.stop_requested()) {
        throw Error(ErrorKind::Cancelled, "interrupted");
    }
}

/// key=value parameters of the construct subcommand.
class Params {
   public:
    explicit Params(const std::vector<std::string> &pairs) {
        for (const std::string &pair : pairs) {
            const auto eq = pair.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw Error(ErrorKind::Parse, "expected key=value, got '" + pair + "'");
            }
            if (!values_.emplace(pair.substr(0, eq), pair.substr(eq + 1)).second) {
                throw Error(ErrorKind::Parse, "parameter '" + pair.substr(0, eq) + "' given twice");
            }
        }
    }

    bool has(const std::string &key) const {
        return values_.count(key) != 0;
    }

    Field field() {
        return parse_field_order(take("q"));
    }

    std::size_t size(const std::string &key) {
        const std::string value = take(key);
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(value, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (value.empty() || value[0] == '-' || pos != value.size()) {
            throw Error(ErrorKind::Parse, "parameter " + key + "=" + value + " is not a non-negative integer");
        }
        return static_cast<std::size_t>(v);
    }

    void finish() const {
        for (const auto &entry : values_) {
            if (!used_.count(entry.first)) {
                throw Error(ErrorKind::Parse, "unknown parameter '" + entry.first + "'");
            }
        }
    }

   private:
    std::string take(const std::string &key) {
        auto it = values_.find(key);
        if (it == values_.end()) {
            throw Error(ErrorKind::Parse, "missing parameter '" + key + "'");
        }
        used_.insert(key);
        return it->second;
    }

    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

FamilyCertificate construct_family(const std::string &family, const std::vector<std::string> &pairs) {
    Params params(pairs);
    if (family == "vandermonde") {
        const Field field = params.field();
        const std::size_t n = params.size("n");
        const std::size_t k = params.size("k");
        const std::size_t t = params.size("t");
        const std::size_t j = params.size("j");
        params.finish();
        return vandermonde_family(field, n, k, t, j);
    }
    if (family == "grs-ext") {
        const Field field = params.field();
        const std::size_t k = params.size("k");
        params.finish();
        return grs_extended_family(field, k);
    }
    if (family == "gabidulin") {
        const Field field = params.field();
        const std::size_t n = params.size("n");
        if (params.has("d")) {
            const std::size_t d = params.size("d");
            const std::size_t c = params.size("c");
            params.finish();
            const GabidulinInputs in = gabidulin_inputs_for(field, n, d, c);
            return gabidulin_family(field, in.n, in.k1, in.k2, in.t);
        }
        const std::size_t k1 = params.size("k1");
        const std::size_t k2 = params.size("k2");
        const std::size_t t = params.size("t");
        params.finish();
        return gabidulin_family(field, n, k1, k2, t);
    }
    throw Error(ErrorKind::Parse, "unknown family '" + family + "' (expected vandermonde, grs-ext or gabidulin)");
}

std::string q_text(const Field &field) {
    return field.order() < 100000 ? std::to_string(field.order()) : field.order_string();
}

std::string csv_inputs_header(Family family) {
    switch (family) {
        case Family::vandermonde:
            return "q,n,k,t,j";
        case Family::grs_extended:
            return "q,k";
        case Family::gabidulin:
            return "q,n,k1,k2,t";
    }
    return "q";
}

std::string csv_inputs(const FamilyCertificate &cert) {
    std::ostringstream row;
    std::visit(
        [&](const auto &in) {
            using T = std::decay_t<decltype(in)>;
            row << q_text(in.field);
            if constexpr (std::is_same_v<T, VandermondeInputs>) {
                row << ',' << in.n << ',' << in.k << ',' << in.t << ',' << in.j;
            } else if constexpr (std::is_same_v<T, GrsInputs>) {
                row << ',' << in.k;
            } else {
                row << ',' << in.n << ',' << in.k1 << ',' << in.k2 << ',' << in.t;
            }
        },
        cert.inputs);
    return row.str();
}

std::string csv_outputs(const FamilyCertificate &cert) {
    std::ostringstream row;
    row << cert.pair.params.label() << ',' << cert.pair.c_product << ',' << cert.pair.c_stack << ','
        << cert.pair.params.slack;
    return row.str();
}

std::string text_line(const FamilyCertificate &cert) {
    std::ostringstream line;
    line << family_name(cert.family) << ' ' << cert.pair.params.label() << "  predicted "
         << cert.predicted.label() << "  c_product=" << cert.pair.c_product << " c_stack=" << cert.pair.c_stack
         << " slack=" << cert.pair.params.slack << "  " << (cert.verified ? "verified" : "NOT VERIFIED");
    for (const std::string &failure : cert.failures) {
        line << "\n    " << failure;
    }
    return line.str();
}

int cmd_construct(const CliConfig &config, const std::string &family, const std::vector<std::string> &pairs,
                  std::ostream &out, std::ostream &err) {
    const FamilyCertificate cert = construct_family(family, pairs);
    switch (config.output) {
        case OutputFormat::json:
            out << cert.to_json(config.emit_matrices).dump(2) << '\n';
            break;
        case OutputFormat::csv:
            out << "family," << csv_inputs_header(cert.family) << ",params,c_product,c_stack,slack,verified\n";
            out << family_name(cert.family) << ',' << csv_inputs(cert) << ',' << csv_outputs(cert) << ','
                << (cert.verified ? "true" : "false") << '\n';
            break;
        case OutputFormat::text:
            out << text_line(cert) << '\n';
            break;
    }
    if (!cert.verified) {
        err << "error: certificate not verified: " << cert.failures.front() << '\n';
        return kInternalMismatch;
    }
    return kOk;
}

int cmd_table(const CliConfig &config, int which, std::ostream &out, std::ostream &err, const std::stop_token &stop) {
    if (which != 1 && which != 2) {
        throw Error(ErrorKind::Parse, "table must be 1 or 2");
    }
    check_stop(stop);
    const std::vector<FamilyCertificate> rows = which == 1 ? table1() : table2();
    bool all_verified = true;
    for (const FamilyCertificate &cert : rows) {
        all_verified = all_verified && cert.verified;
    }
    switch (config.output) {
        case OutputFormat::json: {
            Json j;
            j["table"] = which;
            j["rows"] = Json::array();
            for (const FamilyCertificate &cert : rows) {
                j["rows"].push_back(cert.to_json(config.emit_matrices));
            }
            j["all_verified"] = all_verified;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << csv_inputs_header(rows.front().family) << ",params,c_product,c_stack,slack\n";
            for (const FamilyCertificate &cert : rows) {
                out << csv_inputs(cert) << ',' << csv_outputs(cert) << '\n';
            }
            break;
        case OutputFormat::text:
            for (const FamilyCertificate &cert : rows) {
                out << text_line(cert) << '\n';
            }
            break;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].verified) {
            err << "error: table " << which << " row " << i + 1 << " " << rows[i].predicted.label()
                << " not verified: " << rows[i].failures.front() << '\n';
            return kInternalMismatch;
        }
    }
    return kOk;
}

FMatrix load_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    }
    return read_matrix(in);
}

int cmd_ebits(const CliConfig &config, const std::string &g1_path, const std::string &h2_path, std::int64_t s,
              std::ostream &out, std::ostream &err) {
    const FMatrix g1 = load_matrix(g1_path);
    const FMatrix h2 = load_matrix(h2_path);
    if (!(g1.field() == h2.field())) {
        throw Error(ErrorKind::FieldMismatch,
                    "G1 is over F_" + g1.field().order_string() + " but H2 is over F_" + h2.field().order_string());
    }
    if (g1.cols() != h2.cols()) {
        throw Error(ErrorKind::LengthMismatch, "G1 has " + std::to_string(g1.cols()) + " columns but H2 has " +
                                                   std::to_string(h2.cols()));
    }
    const LinearCode c1 = LinearCode::from_generator(g1, true);
    const LinearCode c2 = LinearCode::from_parity_check(h2);
    const std::size_t c_product = ebits_product(c1, c2, s);
    const std::size_t c_stack = ebits_stack(c1, c2, s);
    const bool agree = c_product == c_stack;
    switch (config.output) {
        case OutputFormat::json: {
            Json j;
            j["q"] = g1.field().order_string();
            j["n"] = g1.cols();
            j["s"] = s;
            j["k1"] = c1.dimension();
            j["k2"] = c2.dimension();
            j["c_product"] = c_product;
            j["c_stack"] = c_stack;
            j["agree"] = agree;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "q,n,s,k1,k2,c_product,c_stack,agree\n"
                << g1.field().order_string() << ',' << g1.cols() << ',' << s << ',' << c1.dimension() << ','
                << c2.dimension() << ',' << c_product << ',' << c_stack << ',' << (agree ? "true" : "false") << '\n';
            break;
        case OutputFormat::text:
            out << "c_product=" << c_product << " c_stack=" << c_stack << ' ' << (agree ? "agree" : "DISAGREE")
                << '\n';
            break;
    }
    if (!agree) {
        err << "error: the two ebit formulas disagree\n";
        return kInternalMismatch;
    }
    return kOk;
}

/// C(n, k), saturating at limit + 1.
std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t limit) {
    k = std::min(k, n - k);
    unsigned __int128 value = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > limit) {
            return limit + 1;
        }
    }
    return static_cast<std::uint64_t>(value);
}

std::uint64_t power_capped(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    unsigned __int128 value = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        value *= base;
        if (value > limit) {
            return limit + 1;
        }
    }
    return static_cast<std::uint64_t>(value);
}

Json encode_word(const Field &field, const std::vector<Element> &word) {
    Json j = Json::array();
    for (const Element &x : word) {
        j.push_back(field.enc(x));
    }
    return j;
}

int cmd_verify(const CliConfig &config, const std::string &path, std::optional<std::size_t> claim_k,
               std::optional<std::size_t> claim_d, std::ostream &out, std::ostream &err,
               const std::stop_token &stop) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    }
    const LinearCode code = read_code(in);
    const Field &field = code.field();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    const DistanceReport report = min_distance(code, config.budget, kDefaultMaxParityWeight, stop);
    if (!report_consistent(code, report)) {
        err << "error: distance witness failed its own check\n";
        return kInternalMismatch;
    }

    // Run the column criterion as a second opinion whenever it is affordable.
    std::optional<MdsCertificate> mds;
    if (report.method == DistanceMethod::mds_columns) {
        mds = MdsCertificate{true, {}};
    } else if (binomial_capped(n, k, config.budget) <= config.budget) {
        mds = is_mds(code, stop);
    }
    const bool exhaustive = report.method == DistanceMethod::exhaustive;
    if (mds && (report.method != DistanceMethod::parity_columns || mds->mds) &&
        mds->mds != (report.d == n - k + 1)) {
        err << "error: " << distance_method_name(report.method) << " gives d=" << report.d
            << " but the MDS column criterion says " << (mds->mds ? "MDS" : "not MDS") << '\n';
        return kInternalMismatch;
    }

    const bool k_ok = !claim_k || *claim_k == k;
    const bool d_ok = !claim_d || *claim_d == report.d;
    const bool confirmed = k_ok && d_ok;

    std::vector<std::string> methods{distance_method_name(report.method)};
    if (mds && report.method != DistanceMethod::mds_columns) {
        methods.push_back(distance_method_name(DistanceMethod::mds_columns));
    }

    switch (config.output) {
        case OutputFormat::json: {
            Json j;
            j["q"] = field.order_string();
            j["n"] = n;
            j["k"] = k;
            j["d"] = report.d;
            j["method"] = distance_method_name(report.method);
            j["witness"] = encode_word(field, report.witness);
            if (!report.witness_columns.empty()) {
                j["witness_columns"] = report.witness_columns;
            }
            if (mds) {
                j["mds"] = mds->mds;
                if (!mds->mds) {
                    j["dependent_columns"] = mds->dependent_columns;
                }
            } else {
                j["mds"] = nullptr;
            }
            j["cross_checked"] = methods;
            Json claims = Json::object();
            if (claim_k) {
                claims["k"] = {{"claimed", *claim_k}, {"confirmed", k_ok}};
            }
            if (claim_d) {
                claims["d"] = {{"claimed", *claim_d}, {"confirmed", d_ok}};
            }
            j["claims"] = claims;
            j["confirmed"] = confirmed;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "q,n,k,d,method,mds,confirmed\n"
                << field.order_string() << ',' << n << ',' << k << ',' << report.d << ','
                << distance_method_name(report.method) << ',' << (mds ? (mds->mds ? "true" : "false") : "")
                << ',' << (confirmed ? "true" : "false") << '\n';
            break;
        case OutputFormat::text:
            out << '[' << n << ',' << k << ',' << report.d << "]_" << q_text(field) << " by "
                << distance_method_name(report.method);
            if (exhaustive && mds) {
                out << " and mds-columns";
            }
            out << (confirmed ? "  confirmed" : "  REFUTED") << '\n';
            break;
    }
    if (!confirmed) {
        err << "error: claim refuted: code is [" << n << ',' << k << ',' << report.d << "]\n";
        return kFailure;
    }
    return kOk;
}

/// Random [n, k] code with 0 <= k <= n over the given field.
LinearCode random_code(const Field &field, std::size_t n, std::mt19937_64 &rng) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    if (k == 0) {
        return LinearCode::from_parity_check(FMatrix::identity(field, n));
    }
    return LinearCode::from_generator(FMatrix::random(field, k, n, rng), true);
}

struct Suite {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
};

int cmd_selftest(const CliConfig &config, std::ostream &out, std::ostream &err, const std::stop_token &stop) {
    std::mt19937_64 rng(config.seed);
    std::vector<Field> fields;
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {13, 1}, {3, 3}}) {
        fields.push_back(Field::create(p, e));
    }
    auto pick_field = [&]() { return fields[rng() % fields.size()]; };
    auto pick_length = [&](std::size_t max_n) { return std::uniform_int_distribution<std::size_t>(1, max_n)(rng); };

    std::vector<Suite> suites;

    Suite formulas{"ebit formulas agree", 0, {}};
    Suite singleton{"entanglement-assisted Singleton slack", 0, {}};
    for (int trial = 0; trial < 500; ++trial) {
        check_stop(stop);
        const Field field = pick_field();
        const std::size_t n = pick_length(12);
        const LinearCode c1 = random_code(field, n, rng);
        const LinearCode c2 = random_code(field, n, rng);
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(field.degree()); ++s) {
            ++formulas.cases;
            const std::size_t a = ebits_product(c1, c2, s);
            const std::size_t b = ebits_stack(c1, c2, s);
            if (a != b) {
                formulas.failures.push_back("trial " + std::to_string(trial) + " s=" + std::to_string(s) +
                                            ": " + std::to_string(a) + " != " + std::to_string(b));
            }
        }
    }

    Suite frob_dual{"Frobenius commutes with duality", 0, {}};
    for (int trial = 0; trial < 200; ++trial) {
        check_stop(stop);
        const Field field = pick_field();
        const LinearCode code = random_code(field, pick_length(12), rng);
        const std::int64_t e = field.degree();
        for (std::int64_t s = 0; s < e; ++s) {
            ++frob_dual.cases;
            if (!(euclidean_dual(code_frobenius(code, e - s)) == code_frobenius(euclidean_dual(code), e - s))) {
                frob_dual.failures.push_back("trial " + std::to_string(trial) + " s=" + std::to_string(s));
            }
        }
    }

    Suite intersection{"intersection dimension matches listing", 0, {}};
    for (int trial = 0; trial < 200; ++trial) {
        check_stop(stop);
        const Field field = pick_field();
        const std::size_t n = pick_length(8);
        LinearCode c1 = random_code(field, n, rng);
        while (power_capped(field.order(), c1.dimension(), config.budget) > config.budget) {
            c1 = random_code(field, n, rng);
        }
        const LinearCode c2 = random_code(field, n, rng);
        const std::int64_t s = static_cast<std::int64_t>(rng() % field.degree());
        ++intersection.cases;
        const std::size_t formula = intersection_dim(c1, c2, s);
        const std::size_t listed = intersection_basis_bruteforce(c1, galois_dual(c2, s), config.budget).rows();
        if (formula != listed) {
            intersection.failures.push_back("trial " + std::to_string(trial) + ": " + std::to_string(formula) +
                                            " != " + std::to_string(listed));
        }
    }

    Suite tables{"published tables", 0, {}};
    for (const auto &rows : {table1(), table2()}) {
        check_stop(stop);
        for (const FamilyCertificate &cert : rows) {
            ++tables.cases;
            if (!cert.verified) {
                tables.failures.push_back(cert.predicted.label() + ": " + cert.failures.front());
            }
            ++singleton.cases;
            if (cert.pair.params.bound_applies() && cert.pair.params.slack < 0) {
                singleton.failures.push_back(cert.pair.params.label());
            }
        }
    }

    suites = {formulas, frob_dual, intersection, tables, singleton};
    bool passed = true;
    for (const Suite &suite : suites) {
        passed = passed && suite.failures.empty();
    }

    switch (config.output) {
        case OutputFormat::json: {
            Json j;
            j["seed"] = config.seed;
            j["suites"] = Json::array();
            for (const Suite &suite : suites) {
                j["suites"].push_back(
                    {{"name", suite.name}, {"cases", suite.cases}, {"failures", suite.failures}});
            }
            j["passed"] = passed;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "suite,cases,failures\n";
            for (const Suite &suite : suites) {
                out << suite.name << ',' << suite.cases << ',' << suite.failures.size() << '\n';
            }
            break;
        case OutputFormat::text:
            for (const Suite &suite : suites) {
                out << (suite.failures.empty() ? "ok    " : "FAIL  ") << suite.name << " (" << suite.cases
                    << " cases, " << suite.failures.size() << " failures)\n";
            }
            break;
    }
    if (!passed) {
        for (const Suite &suite : suites) {
            for (const std::string &failure : suite.failures) {
                err << "error: " << suite.name << ": " << failure << '\n';
            }
        }
        return kInternalMismatch;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::stop_token stop) {
    CliConfig config;
    CLI::App app{"Exact finite-field tools for entanglement-assisted quantum MDS codes", "eaqec"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--budget", config.budget, "Exhaustive search budget in codewords or subsets")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Seed for randomized checks");
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
    app.add_option("--output", config.output, "Output format: json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--emit-matrices", config.emit_matrices, "Include G1 and H2 in certificates");

    std::string family;
    std::vector<std::string> pairs;
    CLI::App *construct = app.add_subcommand("construct", "Build and certify one family instance");
    construct->fallthrough();
    construct->add_option("family", family, "vandermonde, grs-ext or gabidulin")->required();
    construct->add_option("params", pairs, "key=value inputs, e.g. q=13 n=12 k=4 t=5 j=7");

    int which = 0;
    CLI::App *table = app.add_subcommand("table", "Regenerate a table of published codes");
    table->fallthrough();
    table->add_option("which", which, "1 (Vandermonde family) or 2 (Gabidulin family)")
        ->required()
        ->check(CLI::IsMember({1, 2}));

    std::string g1_path, h2_path;
    std::int64_t s = 0;
    CLI::App *ebits = app.add_subcommand("ebits", "Evaluate both ebit formulas on matrix files");
    ebits->fallthrough();
    ebits->add_option("g1", g1_path, "Generator matrix of C1")->required();
    ebits->add_option("h2", h2_path, "Parity-check matrix of C2")->required();
    ebits->add_option("--s", s, "Galois parameter, 0 <= s < e");

    std::string code_path;
    std::optional<std::size_t> claim_k, claim_d;
    CLI::App *verify = app.add_subcommand("verify", "Certify or refute the parameters of a code file");
    verify->fallthrough();
    verify->add_option("code", code_path, "Code or generator matrix file")->required();
    verify->add_option("--k", claim_k, "Claimed dimension");
    verify->add_option("--d", claim_d, "Claimed minimum distance");

    CLI::App *selftest = app.add_subcommand("selftest", "Run the randomized property suites and the tables");
    selftest->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    try {
        if (*construct) {
            return cmd_construct(config, family, pairs, out, err);
        }
        if (*table) {
            return cmd_table(config, which, out, err, stop);
        }
        if (*ebits) {
            return cmd_ebits(config, g1_path, h2_path, s, out, err);
        }
        if (*verify) {
            return cmd_verify(config, code_path, claim_k, claim_d, out, err, stop);
        }
        if (*selftest) {
            return cmd_selftest(config, out, err, stop);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kFailure;
}

}  // namespace eaqec::cli
