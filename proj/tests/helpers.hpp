#pragma once

#include <random>

#include "ordsmith/order.hpp"

namespace testutil {

using namespace ordsmith;

inline Order qf(int d) { return Order::quadratic(Int(d)); }

// The paper-derived maximal order in (-17,-3), reduced discriminant 17.
inline Order example2_order() {
    QMat b(4, 4);
    auto set = [&](int r, Rat x0, Rat x1, Rat x2, Rat x3) {
        b.at(r, 0) = x0;
        b.at(r, 1) = x1;
        b.at(r, 2) = x2;
        b.at(r, 3) = x3;
    };
    set(0, 1, 0, 0, 0);
    set(1, Rat(1, 2), 0, Rat(1, 2), 0);
    set(2, Rat(1, 2), Rat(1, 2), Rat(1, 6), Rat(1, 6));
    set(3, Rat(-1, 2), 0, Rat(1, 6), Rat(-1, 3));
    return Order::quaternion(Int(-17), Int(-3), b);
}

// Hurwitz order in (-1,-1), reduced discriminant 2.
inline Order hurwitz_order() {
    QMat b(4, 4);
    b.at(0, 0) = 1;
    b.at(1, 1) = 1;
    b.at(2, 2) = 1;
    b.at(3, 0) = Rat(1, 2);
    b.at(3, 1) = Rat(1, 2);
    b.at(3, 2) = Rat(1, 2);
    b.at(3, 3) = Rat(1, 2);
    return Order::quaternion(Int(-1), Int(-1), b);
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed0517ULL);
    return gen;
}

inline Int rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng()));
}

inline Elem rand_elem(const Order& o, long height = 20) {
    Elem e;
    for (int i = 0; i < o.dim(); ++i) e.c[i] = rand_int(-height, height);
    return e;
}

inline Elem rand_nonzero(const Order& o, long height = 20) {
    Elem e = rand_elem(o, height);
    while (e.is_zero()) e = rand_elem(o, height);
    return e;
}

}  // namespace testutil
