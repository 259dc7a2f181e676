#include "gsvr/stats.hpp"

namespace gsvr {

Counters& counters() {
    static Counters c;
    return c;
}

} // namespace gsvr
