// Regenerates golden/condition_I_counts.json from the brute-force reference:
//   make_golden 10 > tests/golden/condition_I_counts.json

#include <cstdlib>
#include <iostream>

#include <json.hpp>

#include "kempkit/group.hpp"
#include "naive.hpp"

int main(int argc, char** argv) {
  const int max_order = argc > 1 ? std::atoi(argv[1]) : 8;
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& orders : kempkit::factor_lists_up_to(max_order)) {
    naive::Group g(orders);
    std::uint64_t count = 0;
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << g.n); ++am) {
      const auto a = naive::from_mask(am);
      for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << g.n); ++bm) {
        count += naive::condition_I(g, a, naive::from_mask(bm)) ? 1 : 0;
      }
    }
    std::string spec;
    for (int d : orders) spec += (spec.empty() ? "Z" : "xZ") + std::to_string(d);
    out[spec] = count;
    std::cerr << spec << " " << count << std::endl;
  }
  std::cout << out.dump(2) << std::endl;
}
