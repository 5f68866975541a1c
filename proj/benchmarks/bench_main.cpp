// Microbenchmarks for the hot paths: exact table construction,
// encryption, decryption, payload matching, and range cracking.
#include <benchmark/benchmark.h>

#include <string>

#include "fibcipher/fibcipher.hpp"

namespace {

using namespace fibcipher;

const char* const kCode = "0135792468";
const char* const kMessage =
    "O_BEAUTIFUL_FOR_SPACIOUS_SKIES,_FOR_AMBER_WAVES_OF_GRAIN.";

SecretCode code() { return SecretCode::parse(kCode); }

Ciphertext demo_ciphertext() {
    SplitMixSource rng(42);
    return encrypt(normalize_text(kMessage), code(), rng);
}

void BM_BuildTable(benchmark::State& state) {
    const NormalizedCode norm = normalize_code(code());
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_table(norm));
    }
}
BENCHMARK(BM_BuildTable);

void BM_EEntry(benchmark::State& state) {
    const BaseValue base = base_value(normalize_code(code()));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_entry(base, n));
    }
}
BENCHMARK(BM_EEntry)->Arg(1)->Arg(20)->Arg(40);

void BM_SliceSchedule(benchmark::State& state) {
    const SecretCode key = code();
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice_schedule(key, 200));
    }
}
BENCHMARK(BM_SliceSchedule);

// Includes the per-call table build, which dominates: this is the
// end-to-end cost of encrypting a 57-symbol message.
void BM_Encrypt57(benchmark::State& state) {
    const Plaintext message = normalize_text(kMessage);
    const SecretCode key = code();
    SplitMixSource rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encrypt(message, key, rng));
    }
}
BENCHMARK(BM_Encrypt57);

void BM_Decrypt800(benchmark::State& state) {
    const Ciphertext ciphertext = demo_ciphertext();
    const SecretCode key = code();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decrypt(ciphertext, key));
    }
}
BENCHMARK(BM_Decrypt800);

void BM_MatchPayload(benchmark::State& state) {
    const ETable table = build_table(normalize_code(code()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_payload("245141846", table));
        benchmark::DoNotOptimize(match_payload("0000000", table));
    }
}
BENCHMARK(BM_MatchPayload);

void BM_CrackRange(benchmark::State& state) {
    CrackRequest request;
    request.ciphertext = demo_ciphertext();
    request.start = SecretCode::parse("0135792400");
    request.count = 101;
    CrackOptions options;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(crack_range(request, options));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 101);
}
BENCHMARK(BM_CrackRange)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
