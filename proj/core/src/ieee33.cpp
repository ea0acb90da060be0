#include "gridtriage/dataset.hpp"

#include <string>

namespace gridtriage {

namespace {

// 33-bus radial feeder. Line i energizes bus i; line 1 runs from the source
// node 0 to the zero-load substation bus 1. Bus 4 is critical, buses 6 and
// 24 important, voll 3200 everywhere.
constexpr std::string_view kBusesCsv = R"csv(bus_id,load_kw,load_class,location_tag
1,0,ordinary,
2,100,ordinary,
3,90,ordinary,
4,120,critical,
5,60,ordinary,
6,60,important,
7,200,ordinary,
8,200,ordinary,
9,60,ordinary,
10,60,ordinary,
11,45,ordinary,
12,60,ordinary,
13,60,ordinary,
14,120,ordinary,
15,60,ordinary,
16,60,ordinary,
17,60,ordinary,
18,90,ordinary,
19,90,ordinary,
20,90,ordinary,
21,90,ordinary,
22,90,ordinary,
23,90,ordinary,
24,420,important,
25,420,ordinary,
26,60,ordinary,
27,60,ordinary,
28,60,ordinary,
29,120,ordinary,
30,200,ordinary,
31,150,ordinary,
32,210,ordinary,
33,60,ordinary,
)csv";

constexpr std::string_view kLinesCsv = R"csv(line_id,from_bus,to_bus,load_factor,voll
1,0,1,0.8,3200
2,1,2,0.9,3200
3,2,3,0.85,3200
4,3,4,0.88,3200
5,4,5,0.89,3200
6,5,6,0.91,3200
7,6,7,0.8,3200
8,7,8,0.9,3200
9,8,9,0.85,3200
10,9,10,0.88,3200
11,10,11,0.89,3200
12,11,12,0.91,3200
13,12,13,0.8,3200
14,13,14,0.9,3200
15,14,15,0.85,3200
16,15,16,0.88,3200
17,16,17,0.89,3200
18,17,18,0.8,3200
19,2,19,0.9,3200
20,19,20,0.85,3200
21,20,21,0.88,3200
22,21,22,0.89,3200
23,3,23,0.91,3200
24,23,24,0.8,3200
25,24,25,0.9,3200
26,6,26,0.85,3200
27,26,27,0.88,3200
28,27,28,0.89,3200
29,28,29,0.91,3200
30,29,30,0.8,3200
31,30,31,0.9,3200
32,31,32,0.85,3200
33,32,33,0.88,3200
)csv";

constexpr std::string_view kClassesCsv = R"csv(class_id,life_min_yr,life_max_yr,p0,v_th_kmh,v_max_kmh,count
1,0,5,0.05,110,150,15
2,5,15,0.07,100,140,106
3,15,25,0.09,95,120,98
4,25,,0.11,90,115,21
)csv";

constexpr std::string_view kPolesCsv = R"csv(line_id,class_id,count
1,2,1
1,4,3
2,2,1
2,4,3
3,2,1
3,3,1
3,4,4
4,2,1
4,3,1
4,4,5
5,2,1
5,3,1
5,4,4
6,1,1
6,3,4
6,4,1
7,2,2
7,3,5
8,2,6
8,4,1
9,2,1
9,3,6
10,1,1
10,2,2
10,3,5
11,2,1
11,3,6
12,2,5
12,3,1
13,1,1
13,2,2
13,3,5
14,2,2
14,3,6
15,2,6
15,3,1
16,2,7
16,3,1
17,2,6
17,3,2
18,2,2
18,3,7
19,2,8
19,3,2
20,1,1
20,2,1
20,3,6
21,1,1
21,2,1
21,3,6
22,1,1
22,2,6
23,2,1
23,3,9
24,1,1
24,2,1
24,3,5
25,2,6
25,3,2
26,1,1
26,2,7
26,3,1
27,1,1
27,2,6
27,3,1
28,2,1
28,3,5
29,1,5
29,2,1
29,3,1
30,2,6
30,3,1
31,2,1
31,3,7
32,1,1
32,2,6
33,2,7
)csv";

}  // namespace

std::map<std::string, std::string_view> bundled_dataset_files(std::string_view name) {
  if (name == "ieee33")
    return {{"buses.csv", kBusesCsv},
            {"lines.csv", kLinesCsv},
            {"classes.csv", kClassesCsv},
            {"poles.csv", kPolesCsv}};
  throw Error(Errc::SchemaError, "unknown bundled dataset '" + std::string(name) + "'");
}

}  // namespace gridtriage
