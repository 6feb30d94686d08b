#pragma once

#include <functional>
#include <string>

#include "superko/random.hpp"
#include "superko/verify.hpp"

namespace superko::detail {

struct Outcome {
    bool ok = true;
    std::string failure;
    std::optional<double> error;

    static Outcome pass() { return {}; }
    static Outcome fail(std::string why) { return {false, std::move(why), std::nullopt}; }
    static Outcome measured(double err, double bound) {
        Outcome o;
        o.error = err;
        if (!(err <= bound)) {
            o.ok = false;
            o.failure = "error " + std::to_string(err) + " above " + std::to_string(bound);
        }
        return o;
    }
};

inline Outcome expect(bool cond, const std::string& why) { return cond ? Outcome::pass() : Outcome::fail(why); }

using Sample = std::function<Outcome(Rng&, std::size_t)>;

// Runs count independent samples, each with its own generator derived from
// (seed, name, index); results are merged in index order.
CheckResult run_check(const std::string& name, std::size_t count, const VerifyOptions& options, const Sample& sample);

SuiteReport grassmann_suite(const VerifyOptions& options);
SuiteReport superspace_suite(const VerifyOptions& options);
SuiteReport bordism_suite(const VerifyOptions& options);
SuiteReport fieldtheory_suite(const VerifyOptions& options);
SuiteReport categories_suite(const VerifyOptions& options);
SuiteReport fredholm_suite(const VerifyOptions& options);

}  // namespace superko::detail
