#include "rtm/extract.hpp"

namespace rtm {

FiniteFn extract_fn(const Machine& m, std::size_t max_len, const OracleFn* oracle) {
    FiniteFn::Table t;
    for (const auto& x : strings_up_to(max_len)) {
        RunOutcome o = run(m, x, oracle);
        if (o.accepted()) t[x] = o.output;
    }
    return FiniteFn(std::move(t));
}

} // namespace rtm
