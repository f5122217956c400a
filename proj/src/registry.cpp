#include "picard/json_io.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace picard {

// Long-lived contexts for values produced by deserialization.
const FieldCtx& field_ctx_of(long d) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, std::make_unique<FieldCtx>(d)).first;
    return *it->second;
}

const FqCtx& fq_ctx_of(long p, long d) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<FqCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<FqCtx>(p, d)).first;
    return *it->second;
}

} // namespace picard
