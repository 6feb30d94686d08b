#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "verify_detail.hpp"

namespace superko {

namespace detail {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t name_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

}  // namespace

CheckResult run_check(const std::string& name, std::size_t count, const VerifyOptions& options, const Sample& sample) {
    std::vector<Outcome> out(count);
    std::uint64_t base = splitmix(options.seed ^ name_hash(name));
    auto work = [&](std::size_t i) {
        Rng rng(splitmix(base + i));
        try {
            out[i] = sample(rng, i);
        } catch (const std::exception& e) {
            out[i] = Outcome::fail(std::string("exception: ") + e.what());
        }
    };
    unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(count)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
            });
        for (auto& t : pool) t.join();
    }
    CheckResult r;
    r.name = name;
    for (std::size_t i = 0; i < count; ++i) {
        const Outcome& o = out[i];
        if (o.error) r.max_error = std::max(r.max_error.value_or(0.0), *o.error);
        if (o.ok) {
            ++r.passed;
        } else {
            if (r.failed++ == 0) r.first_failure = "sample " + std::to_string(i) + ": " + o.failure;
        }
    }
    return r;
}

}  // namespace detail

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.failed;
    return f;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"grassmann", "superspace", "bordism", "fieldtheory", "categories", "fredholm"};
    return names;
}

bool is_suite(const std::string& name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& options) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    std::vector<SuiteReport> out;
    for (const auto& s : suite_names()) {
        if (name != "all" && name != s) continue;
        if (s == "grassmann") out.push_back(detail::grassmann_suite(options));
        if (s == "superspace") out.push_back(detail::superspace_suite(options));
        if (s == "bordism") out.push_back(detail::bordism_suite(options));
        if (s == "fieldtheory") out.push_back(detail::fieldtheory_suite(options));
        if (s == "categories") out.push_back(detail::categories_suite(options));
        if (s == "fredholm") out.push_back(detail::fredholm_suite(options));
    }
    return out;
}

Json to_json(const CheckResult& c) {
    Json j = {{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
    j["max_error"] = c.max_error ? Json(*c.max_error) : Json(nullptr);
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    return j;
}

Json to_json(const SuiteReport& s) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    return {{"suite", s.suite}, {"ok", s.ok()}, {"failures", s.failures()}, {"checks", checks}};
}

Json verify_json(const std::string& name, std::uint64_t seed, const std::vector<SuiteReport>& reports) {
    Json suites = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        suites.push_back(to_json(r));
        ok = ok && r.ok();
    }
    return {{"command", "verify"}, {"suite", name}, {"seed", seed}, {"ok", ok}, {"suites", suites}};
}

std::string verify_markdown(const std::string& name, std::uint64_t seed, const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    os << "# verify " << name << " (seed " << seed << ")\n\n";
    os << "| suite | check | passed | failed | max error | first failure |\n";
    os << "|---|---|---:|---:|---:|---|\n";
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        for (const auto& c : r.checks) {
            os << "| " << r.suite << " | " << c.name << " | " << c.passed << " | " << c.failed << " | ";
            if (c.max_error) os << std::scientific << std::setprecision(2) << *c.max_error << std::defaultfloat;
            os << " | " << c.first_failure << " |\n";
        }
    }
    os << "\n" << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace superko
