#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cmclab {

// Central difference with one Richardson level, O(h^4).
template <class F>
auto dcentral(F&& f, double x, double h) {
    auto D = [&](double hh) { return (f(x + hh) - f(x - hh)) * (1.0 / (2.0 * hh)); };
    return (D(h / 2) * 4.0 - D(h)) * (1.0 / 3.0);
}

// Plain second-order central difference (no extrapolation).
template <class F>
auto dcentral_plain(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) * (1.0 / (2.0 * h));
}

// Second derivative, central with one Richardson level, O(h^4).
template <class F>
auto d2central(F&& f, double x, double h) {
    auto fx = f(x);
    auto D2 = [&](double hh) { return (f(x + hh) - fx * 2.0 + f(x - hh)) * (1.0 / (hh * hh)); };
    return (D2(h / 2) * 4.0 - D2(h)) * (1.0 / 3.0);
}

// Mixed partial d^2 f / dx dy via nested Richardson first differences.
template <class F>
auto dmixed(F&& f, double x, double y, double hx, double hy) {
    auto outer = [&](double a) {
        auto inner = [&](double b) { return f(a, b); };
        return dcentral(inner, y, hy);
    };
    return dcentral(outer, x, hx);
}

inline double default_step(double coord, double base = 1e-5) {
    return base * (1.0 + std::abs(coord));
}

inline unsigned thread_cap() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CMCLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
    }
    return n;
}

// Runs fn(i) for i in [0,n). Work is split across threads; results must be
// written by index so the outcome is independent of scheduling.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned nt = thread_cap();
    if (nt <= 1 || n < 2 * nt) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

} // namespace cmclab
