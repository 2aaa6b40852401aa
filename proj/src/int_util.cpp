#include "quadra/int_util.hpp"

namespace quadra {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return false;
        }
    }
    return true;
}

}  // namespace quadra
