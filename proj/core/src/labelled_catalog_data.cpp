#include "altembed/obstruction.hpp"

namespace altembed {

// Labelled-type obstructions found by the exhaustive search over terminal
// graphs with at most 8 vertices (non-terminal degree >= 3). Regression-
// pinned output of search_obstructions; rebuilt records must match exactly.
//
// Names follow the shapes of the labelled graph H = G - x - y: Pentagon and
// Hexagon are determined (5-cycle all-double-labels with the xy edge, 6-cycle
// alternating single labels with the xy edge); the rest are tentative reads
// of the corresponding case analysis and two stay unnamed.
//
// Record format: graph6, x, y, classification, H-connectivity, name.
const std::vector<std::string>& labelled_catalog_records() {
    static const std::vector<std::string> records = {
        "F}vn_ 0 1 labelled_type 2-connected Pentagon",
        "F]vng 0 1 labelled_type 2-connected Rocket(tentative)",
        "F]vfw 0 1 labelled_type connectivity-1 Bowtie(tentative)",
        "GiQ\\T_ 0 1 labelled_type 2-connected Hexagon",
        "GIea\\c 0 1 labelled_type 2-connected Bullet(tentative)",
        "GLhImK 0 1 labelled_type 2-connected FrogOrHive(tentative)",
        "GFzfF? 0 1 labelled_type connectivity-1 Star(tentative)",
        "GImuMK 0 1 labelled_type connectivity-1 Doll(tentative)",
        "GFzFNG 0 1 labelled_type connectivity-1 Four(tentative)",
        "GFzENK 0 1 labelled_type connectivity-1 Alien(tentative)",
        "GFrNNO 0 1 labelled_type connectivity-1 Lollipop(tentative)",
    };
    return records;
}

}  // namespace altembed
