// libFuzzer entry point for the .mcarch parser.
//   cmake -B build-fuzz -DCMAKE_CXX_COMPILER=clang++ -DMCRISK_BUILD_FUZZER=ON
//   ./build-fuzz/tools/fuzz_parse data/

#include "mcrisk/dsl.hpp"

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string_view>

extern "C" int LLVMFuzzerTestOneInput(const std::uint8_t* data, std::size_t size) {
    const std::string_view source(reinterpret_cast<const char*>(data), size);
    const auto result = mcrisk::dsl::parse(source);
    for (const auto& e : result.errors) {
        if (e.span.offset > source.size() || e.message.empty()) std::abort();
    }
    if (result.ok()) {
        const auto again = mcrisk::dsl::parse(mcrisk::dsl::serialize(*result.model));
        if (!again.ok() || !(*again.model == *result.model)) std::abort();
    }
    return 0;
}
