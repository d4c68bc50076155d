#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpm/dp_baseline.hpp"
#include "rpm/metrics.hpp"
#include "rpm/oracle.hpp"
#include "rpm/runs.hpp"
#include "rpm/solver.hpp"

namespace rpm::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct MineOptions {
    std::string input;
    std::optional<index_t> tau;
    std::optional<index_t> k;
    std::string engine = "esa";
    std::string emit = "output-array";
    bool binary = false;
    bool no_text = false;
    bool strip_newlines = false;
    bool bench = false;
    std::vector<std::string> sweep;
    std::string metric;
    std::string versions;
};

struct VerifyOptions {
    index_t n = 24;
    int cases = 100;
    std::uint64_t seed = 7;
};

struct Cell {
    index_t tau;
    index_t k;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Text read_text(const std::string& path, bool strip_newlines) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot read '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Failure("cannot read '" + path + "'");
    if (strip_newlines)
        bytes.erase(std::remove_if(bytes.begin(), bytes.end(), [](std::uint8_t c) { return c == '\n' || c == '\r'; }),
                    bytes.end());
    return Text(std::move(bytes));
}

std::vector<index_t> parse_list(const std::string& arg, const std::string& key) {
    const std::string prefix = key + "=";
    if (arg.rfind(prefix, 0) != 0) throw Failure("--sweep expects '" + prefix + "a,b,...', got '" + arg + "'");
    std::vector<index_t> values;
    std::stringstream ss(arg.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(static_cast<index_t>(v));
        } catch (const std::exception&) {
            throw Failure("--sweep: bad integer '" + item + "'");
        }
    }
    if (values.empty()) throw Failure("--sweep: empty list for " + key);
    return values;
}

std::vector<Cell> make_cells(const MineOptions& opt) {
    std::vector<index_t> taus;
    std::vector<index_t> ks;
    for (const auto& s : opt.sweep) {
        if (s.rfind("tau=", 0) == 0)
            taus = parse_list(s, "tau");
        else if (s.rfind("k=", 0) == 0)
            ks = parse_list(s, "k");
        else
            throw Failure("--sweep expects tau=... and/or k=..., got '" + s + "'");
    }
    if (taus.empty()) {
        if (!opt.tau) throw Failure("--tau is required (or give tau=... in --sweep)");
        taus = {*opt.tau};
    }
    if (ks.empty()) {
        if (!opt.k) throw Failure("--k is required (or give k=... in --sweep)");
        ks = {*opt.k};
    }
    std::vector<Cell> cells;
    for (index_t t : taus)
        for (index_t k : ks) {
            validate_parameters(t, k);
            cells.push_back({t, k});
        }
    return cells;
}

// Peak resident set size in KiB, or -1 where /proc is unavailable.
long peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line))
        if (line.rfind("VmHWM:", 0) == 0) return std::stol(line.substr(6));
    return -1;
}

std::vector<fs::path> version_files(const std::string& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Failure("--versions: '" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

class Miner {
public:
    Miner(const MineOptions& opt, Text text) : opt_(opt), text_(std::move(text)) {
        if (!text_.empty()) {
            if (opt_.engine == "esa")
                solver_.emplace(text_);
            else
                index_.emplace(text_);
        }
    }

    OutputArray solve(const Cell& c) const {
        if (text_.empty()) return {};
        if (opt_.engine == "esa") return solver_->solve(c.tau, c.k);
        if (opt_.engine == "dp") return dp::solve_dp(text_, c.tau, c.k);
        return oracle::brute_solve(text_, c.tau, c.k);
    }

    const Text& text() const { return text_; }
    const EnhancedIndex& index() const { return solver_ ? solver_->index() : *index_; }

private:
    const MineOptions& opt_;
    Text text_;
    std::optional<ResilienceSolver> solver_;
    std::optional<EnhancedIndex> index_;
};

void emit_output(const MineOptions& opt, const Miner& miner, const OutputArray& output, std::ostream& out) {
    if (opt.emit == "output-array") {
        if (opt.binary) {
            for (const index_t v : output) {
                const auto u = static_cast<std::uint32_t>(v);
                const char le[4] = {static_cast<char>(u & 0xff), static_cast<char>((u >> 8) & 0xff),
                                    static_cast<char>((u >> 16) & 0xff), static_cast<char>((u >> 24) & 0xff)};
                out.write(le, 4);
            }
        } else {
            for (const index_t v : output) out << v << '\n';
        }
        return;
    }
    if (output.empty()) return;
    for (const auto& ref : list_resilient(output, miner.index())) {
        out << ref.pos << '\t' << ref.len;
        if (!opt.no_text) out << '\t' << miner.text().view().substr(ref.pos, ref.len);
        out << '\n';
    }
}

json metric_value(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

void emit_metrics(const MineOptions& opt, const Miner& miner, const Cell& c, const OutputArray& output,
                  std::ostream& out) {
    auto record = [&](const std::string& name, std::optional<double> value) {
        return json{{"metric", name}, {"tau", c.tau}, {"k", c.k}, {"value", metric_value(value)}};
    };
    const Text& text = miner.text();
    if (opt.metric == "rfr") {
        std::optional<double> value;
        if (!text.empty()) {
            const auto frequent = metrics::count_tau_frequent(miner.index(), c.tau);
            if (frequent > 0)
                value = static_cast<double>(count_resilient(output, miner.index())) / static_cast<double>(frequent);
        }
        out << record("rfr", value).dump() << '\n';
        return;
    }
    const auto mined = text.empty() ? metrics::SubstringSet{} : metrics::resilient_set(text, miner.index(), output);
    if (opt.versions.empty()) {
        if (opt.metric == "lr") throw Failure("--metrics lr needs --versions");
        const auto frequent =
            text.empty() ? metrics::SubstringSet{} : metrics::frequent_set(text, miner.index(), c.tau);
        out << record("jaccard", metrics::jaccard(mined, frequent)).dump() << '\n';
        return;
    }
    for (const auto& path : version_files(opt.versions)) {
        const Text version = read_text(path.string(), opt.strip_newlines);
        std::optional<double> value;
        if (opt.metric == "lr") {
            if (!mined.empty()) value = metrics::lr(mined, version, c.tau);
        } else {
            metrics::SubstringSet frequent;
            if (!version.empty()) frequent = metrics::frequent_set(version, EnhancedIndex(version), c.tau);
            value = metrics::jaccard(mined, frequent);
        }
        auto rec = record(opt.metric, value);
        rec["version"] = path.filename().string();
        out << rec.dump() << '\n';
    }
}

int run_mine(const MineOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.binary && opt.emit != "output-array") throw Failure("--binary applies to --emit output-array only");
    if (!opt.versions.empty() && opt.metric.empty()) throw Failure("--versions needs --metrics");
    const auto cells = make_cells(opt);

    const auto start = std::chrono::steady_clock::now();
    Miner miner(opt, read_text(opt.input, opt.strip_newlines));
    const double build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!miner.text().empty() && miner.text().sigma() <= 3)
        err << "note: alphabet has " << miner.text().sigma()
            << " letters; results follow the sentinel substitution model\n";
    if (opt.bench)
        err << "bench engine=" << opt.engine << " n=" << miner.text().size() << " phase=build wall_ms=" << build_ms
            << '\n';

    const bool headers = cells.size() > 1 && opt.metric.empty() && !opt.binary;
    for (const auto& c : cells) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto output = miner.solve(c);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (opt.bench)
            err << "bench engine=" << opt.engine << " n=" << miner.text().size() << " tau=" << c.tau << " k=" << c.k
                << " wall_ms=" << ms << " peak_rss_kb=" << peak_rss_kb() << '\n';
        if (!opt.metric.empty()) {
            emit_metrics(opt, miner, c, output, out);
            continue;
        }
        if (headers) out << "# tau=" << c.tau << " k=" << c.k << '\n';
        emit_output(opt, miner, output, out);
    }
    return 0;
}

std::string random_text(std::mt19937_64& rng, index_t n, int sigma) {
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& c : s) c = static_cast<char>('a' + letter(rng));
    return s;
}

bool monotone(const OutputArray& lo, const OutputArray& hi) {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return false;
    return true;
}

bool suffix_closed(const OutputArray& out) {
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i + 1] < out[i] - 1) return false;
    return true;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.n < 1) throw Failure("--n must be >= 1");
    if (opt.cases < 0) throw Failure("--cases must be >= 0");
    const auto caps = oracle::OracleCaps::from_env();
    std::mt19937_64 rng(opt.seed);
    int agree = 0;
    int runs_ok = 0;
    int monotone_ok = 0;
    int brute_cases = 0;
    for (int c = 0; c < opt.cases; ++c) {
        const index_t n = std::uniform_int_distribution<index_t>(1, opt.n)(rng);
        const int sigma = std::uniform_int_distribution<int>(0, 1)(rng) ? 4 : 2;
        const index_t tau = std::uniform_int_distribution<index_t>(1, 6)(rng);
        const index_t k = std::uniform_int_distribution<index_t>(0, 2)(rng);
        const Text text(random_text(rng, n, sigma));

        const ResilienceSolver solver(text);
        const auto esa = solver.solve(tau, k);
        const bool with_brute = n <= caps.max_n && k <= caps.max_k;
        bool same = esa == dp::solve_dp(text, tau, k);
        if (with_brute) {
            ++brute_cases;
            same = same && esa == oracle::brute_solve(text, tau, k, caps);
        }
        if (same) ++agree;
        if (n > 500 || compute_runs(text) == oracle::brute_runs(text)) ++runs_ok;
        if (monotone(solver.solve(tau + 1, k), esa) && monotone(solver.solve(tau, k + 1), esa) && suffix_closed(esa))
            ++monotone_ok;
    }
    out << agree << '/' << opt.cases << " engines agree\n";
    out << brute_cases << '/' << opt.cases << " cases checked against the brute-force oracle\n";
    out << runs_ok << '/' << opt.cases << " run sets match\n";
    out << monotone_ok << '/' << opt.cases << " outputs monotone and suffix-closed\n";
    const bool ok = agree == opt.cases && runs_ok == opt.cases && monotone_ok == opt.cases;
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"(tau, k)-resilient pattern mining"};
    app.require_subcommand(1);

    MineOptions mine;
    auto* mine_cmd = app.add_subcommand("mine", "Compute the longest resilient prefix at every position");
    mine_cmd->add_option("--input", mine.input, "Input file; its bytes are the text")->required();
    mine_cmd->add_option("--tau", mine.tau, "Frequency threshold (>= 1)");
    mine_cmd->add_option("--k", mine.k, "Number of substitutions (>= 0)");
    mine_cmd->add_option("--engine", mine.engine, "esa, dp or brute")
        ->check(CLI::IsMember({"esa", "dp", "brute"}))
        ->capture_default_str();
    mine_cmd->add_option("--emit", mine.emit, "output-array or list")
        ->check(CLI::IsMember({"output-array", "list"}))
        ->capture_default_str();
    mine_cmd->add_flag("--binary", mine.binary, "Write the output array as little-endian uint32");
    mine_cmd->add_flag("--no-text", mine.no_text, "Omit substring text from list records");
    mine_cmd->add_flag("--strip-newlines", mine.strip_newlines, "Drop CR and LF bytes from the input");
    mine_cmd->add_flag("--bench", mine.bench, "Report wall time and peak RSS on stderr");
    mine_cmd->add_option("--sweep", mine.sweep, "tau=a,b,... and/or k=x,y,...; runs the cross product")
        ->expected(1, 2);
    mine_cmd->add_option("--metrics", mine.metric, "rfr, jaccard or lr; JSON lines")
        ->check(CLI::IsMember({"rfr", "jaccard", "lr"}));
    mine_cmd->add_option("--versions", mine.versions, "Directory of version files for jaccard and lr");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the engines on random texts");
    verify_cmd->add_option("--n", verify.n, "Maximum text length")->capture_default_str();
    verify_cmd->add_option("--cases", verify.cases, "Number of random texts")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        err << "error: " << msg.substr(0, msg.find('\n')) << '\n';
        return 2;
    }

    try {
        if (*mine_cmd) return run_mine(mine, out, err);
        return run_verify(verify, out);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        err << "error: " << msg.substr(0, msg.find('\n')) << '\n';
        return 1;
    }
}

}  // namespace rpm::cli
