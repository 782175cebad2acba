// Compares the serial and OpenMP variants of the two heavy kernels:
// enumeration canonicalization and the spectral property suite. Both
// variants must produce identical results; timings are printed side by side.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "qops/enumerate.hpp"
#include "qops/verify.hpp"

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 7;
    int samples = argc > 2 ? std::atoi(argv[2]) : 400;

    using namespace qops;

    std::size_t count_serial = 0, count_par = 0;
    EnumerateOptions serial, par;
    serial.parallel = false;
    par.parallel = true;
    double ts = timed([&] { count_serial = enumerate_models(n, serial).size(); });
    double tp = timed([&] { count_par = enumerate_models(n, par).size(); });
    std::printf("enumerate n=%d: serial %.3fs parallel %.3fs (count %zu/%zu %s)\n", n, ts, tp,
                count_serial, count_par, count_serial == count_par ? "match" : "MISMATCH");

    SpectralVerifyResult rs, rp;
    double vs = timed([&] { rs = spectral_verify(samples, 3, 42, /*parallel=*/false); });
    double vp = timed([&] { rp = spectral_verify(samples, 3, 42, /*parallel=*/true); });
    bool agree = rs.violations == rp.violations && rs.first_failure == rp.first_failure;
    std::printf("spectral d=3 N=%d: serial %.3fs parallel %.3fs (violations %d/%d %s)\n",
                samples, vs, vp, rs.violations, rp.violations, agree ? "match" : "MISMATCH");

    return (count_serial == count_par && agree) ? 0 : 1;
}
