#pragma once

#include <mutex>
#include <unordered_map>

namespace kschubert::detail {

/// Insert-only cache; references to stored values stay valid.
template <class K, class V, class H = std::hash<K>>
class MemoTable {
 public:
  const V* find(const K& key) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }
  const V& insert(const K& key, V value) {
    std::lock_guard lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<K, V, H> map_;
};

}  // namespace kschubert::detail
