// suites.hpp -- the verification suites and their registry

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tk/families.hpp"
#include "tk/report.hpp"

namespace tk {

/// String-keyed parameters as given on the command line; each suite
/// documents which keys it reads and applies its own defaults.
struct SuiteParams {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::string get(const std::string& key, const std::string& fallback) const;
};

/// Shared catalog store.  Suites build catalogs on demand up to the inline
/// build limit; larger ones must be preloaded (CLI --catalog, or the
/// acceptance harness).
class CatalogCache {
  public:
    static constexpr int kInlineBuildLimit = 8;

    const Catalog& get(int n);
    void put(Catalog catalog);
    bool contains(int n) const { return store_.count(n) != 0; }

  private:
    std::map<int, Catalog> store_;
};

struct SuiteInfo {
    std::string name;
    std::string statement;  // the property the suite checks, in one line
    Report (*run)(const SuiteParams&, CatalogCache&);
};

const std::vector<SuiteInfo>& suite_registry();

/// Runs the named suite; fills runtime_ms and echoes effective parameters.
/// Throws std::invalid_argument for an unknown suite or bad parameters.
Report run_suite(const std::string& name, const SuiteParams& params,
                 CatalogCache& cache);

}  // namespace tk
