#include "oriclique/errors.hpp"

namespace oriclique {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::antisymmetry: return "Antisymmetry";
    case errc::duplicate_arc: return "DuplicateArc";
    case errc::out_of_range: return "OutOfRange";
    case errc::missing_arc: return "MissingArc";
    case errc::capacity: return "Capacity";
    case errc::empty_graph: return "EmptyGraph";
    case errc::not_a_clique: return "NotAClique";
    case errc::bad_partition: return "BadPartition";
    case errc::not_extending: return "NotExtending";
    case errc::no_such_order: return "NoSuchOrder";
    case errc::even_order: return "EvenOrder";
    case errc::bad_connection_set: return "BadConnectionSet";
    case errc::bad_format: return "BadFormat";
    case errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace oriclique
