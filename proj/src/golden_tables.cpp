#include "corridor/verify.hpp"

#include <stdexcept>

namespace corridor {

namespace {

// Expected count tables, every positive cell for n <= 16, in the long CSV
// layout emitted by render_table.
const std::string kGoldenH4 = R"csv(i,ell,n,count
4,4,0,1
4,4,2,1
4,4,4,2
4,4,6,5
4,4,8,14
4,4,10,41
4,4,12,122
4,4,14,365
4,4,16,1094
4,3,1,1
4,3,3,2
4,3,5,5
4,3,7,14
4,3,9,41
4,3,11,122
4,3,13,365
4,3,15,1094
4,2,2,1
4,2,4,3
4,2,6,9
4,2,8,27
4,2,10,81
4,2,12,243
4,2,14,729
4,2,16,2187
4,1,3,1
4,1,5,4
4,1,7,13
4,1,9,40
4,1,11,121
4,1,13,364
4,1,15,1093
4,0,4,1
4,0,6,4
4,0,8,13
4,0,10,40
4,0,12,121
4,0,14,364
4,0,16,1093
3,4,1,1
3,4,3,2
3,4,5,5
3,4,7,14
3,4,9,41
3,4,11,122
3,4,13,365
3,4,15,1094
3,3,0,1
3,3,2,2
3,3,4,5
3,3,6,14
3,3,8,41
3,3,10,122
3,3,12,365
3,3,14,1094
3,3,16,3281
3,2,1,1
3,2,3,3
3,2,5,9
3,2,7,27
3,2,9,81
3,2,11,243
3,2,13,729
3,2,15,2187
3,1,2,1
3,1,4,4
3,1,6,13
3,1,8,40
3,1,10,121
3,1,12,364
3,1,14,1093
3,1,16,3280
3,0,3,1
3,0,5,4
3,0,7,13
3,0,9,40
3,0,11,121
3,0,13,364
3,0,15,1093
2,4,2,1
2,4,4,3
2,4,6,9
2,4,8,27
2,4,10,81
2,4,12,243
2,4,14,729
2,4,16,2187
2,3,1,1
2,3,3,3
2,3,5,9
2,3,7,27
2,3,9,81
2,3,11,243
2,3,13,729
2,3,15,2187
2,2,0,1
2,2,2,2
2,2,4,6
2,2,6,18
2,2,8,54
2,2,10,162
2,2,12,486
2,2,14,1458
2,2,16,4374
2,1,1,1
2,1,3,3
2,1,5,9
2,1,7,27
2,1,9,81
2,1,11,243
2,1,13,729
2,1,15,2187
2,0,2,1
2,0,4,3
2,0,6,9
2,0,8,27
2,0,10,81
2,0,12,243
2,0,14,729
2,0,16,2187
1,4,3,1
1,4,5,4
1,4,7,13
1,4,9,40
1,4,11,121
1,4,13,364
1,4,15,1093
1,3,2,1
1,3,4,4
1,3,6,13
1,3,8,40
1,3,10,121
1,3,12,364
1,3,14,1093
1,3,16,3280
1,2,1,1
1,2,3,3
1,2,5,9
1,2,7,27
1,2,9,81
1,2,11,243
1,2,13,729
1,2,15,2187
1,1,0,1
1,1,2,2
1,1,4,5
1,1,6,14
1,1,8,41
1,1,10,122
1,1,12,365
1,1,14,1094
1,1,16,3281
1,0,1,1
1,0,3,2
1,0,5,5
1,0,7,14
1,0,9,41
1,0,11,122
1,0,13,365
1,0,15,1094
0,4,4,1
0,4,6,4
0,4,8,13
0,4,10,40
0,4,12,121
0,4,14,364
0,4,16,1093
0,3,3,1
0,3,5,4
0,3,7,13
0,3,9,40
0,3,11,121
0,3,13,364
0,3,15,1093
0,2,2,1
0,2,4,3
0,2,6,9
0,2,8,27
0,2,10,81
0,2,12,243
0,2,14,729
0,2,16,2187
0,1,1,1
0,1,3,2
0,1,5,5
0,1,7,14
0,1,9,41
0,1,11,122
0,1,13,365
0,1,15,1094
0,0,0,1
0,0,2,1
0,0,4,2
0,0,6,5
0,0,8,14
0,0,10,41
0,0,12,122
0,0,14,365
0,0,16,1094
)csv";

const std::string kGoldenH5 = R"csv(i,ell,n,count
5,5,0,1
5,5,2,1
5,5,4,2
5,5,6,5
5,5,8,14
5,5,10,42
5,5,12,131
5,5,14,417
5,5,16,1341
5,4,1,1
5,4,3,2
5,4,5,5
5,4,7,14
5,4,9,42
5,4,11,131
5,4,13,417
5,4,15,1341
5,3,2,1
5,3,4,3
5,3,6,9
5,3,8,28
5,3,10,89
5,3,12,286
5,3,14,924
5,3,16,2993
5,2,3,1
5,2,5,4
5,2,7,14
5,2,9,47
5,2,11,155
5,2,13,507
5,2,15,1652
5,1,4,1
5,1,6,5
5,1,8,19
5,1,10,66
5,1,12,221
5,1,14,728
5,1,16,2380
5,0,5,1
5,0,7,5
5,0,9,19
5,0,11,66
5,0,13,221
5,0,15,728
4,5,1,1
4,5,3,2
4,5,5,5
4,5,7,14
4,5,9,42
4,5,11,131
4,5,13,417
4,5,15,1341
4,4,0,1
4,4,2,2
4,4,4,5
4,4,6,14
4,4,8,42
4,4,10,131
4,4,12,417
4,4,14,1341
4,4,16,4334
4,3,1,1
4,3,3,3
4,3,5,9
4,3,7,28
4,3,9,89
4,3,11,286
4,3,13,924
4,3,15,2993
4,2,2,1
4,2,4,4
4,2,6,14
4,2,8,47
4,2,10,155
4,2,12,507
4,2,14,1652
4,2,16,5373
4,1,3,1
4,1,5,5
4,1,7,19
4,1,9,66
4,1,11,221
4,1,13,728
4,1,15,2380
4,0,4,1
4,0,6,5
4,0,8,19
4,0,10,66
4,0,12,221
4,0,14,728
4,0,16,2380
3,5,2,1
3,5,4,3
3,5,6,9
3,5,8,28
3,5,10,89
3,5,12,286
3,5,14,924
3,5,16,2993
3,4,1,1
3,4,3,3
3,4,5,9
3,4,7,28
3,4,9,89
3,4,11,286
3,4,13,924
3,4,15,2993
3,3,0,1
3,3,2,2
3,3,4,6
3,3,6,19
3,3,8,61
3,3,10,197
3,3,12,638
3,3,14,2069
3,3,16,6714
3,2,1,1
3,2,3,3
3,2,5,10
3,2,7,33
3,2,9,108
3,2,11,352
3,2,13,1145
3,2,15,3721
3,1,2,1
3,1,4,4
3,1,6,14
3,1,8,47
3,1,10,155
3,1,12,507
3,1,14,1652
3,1,16,5373
3,0,3,1
3,0,5,4
3,0,7,14
3,0,9,47
3,0,11,155
3,0,13,507
3,0,15,1652
2,5,3,1
2,5,5,4
2,5,7,14
2,5,9,47
2,5,11,155
2,5,13,507
2,5,15,1652
2,4,2,1
2,4,4,4
2,4,6,14
2,4,8,47
2,4,10,155
2,4,12,507
2,4,14,1652
2,4,16,5373
2,3,1,1
2,3,3,3
2,3,5,10
2,3,7,33
2,3,9,108
2,3,11,352
2,3,13,1145
2,3,15,3721
2,2,0,1
2,2,2,2
2,2,4,6
2,2,6,19
2,2,8,61
2,2,10,197
2,2,12,638
2,2,14,2069
2,2,16,6714
2,1,1,1
2,1,3,3
2,1,5,9
2,1,7,28
2,1,9,89
2,1,11,286
2,1,13,924
2,1,15,2993
2,0,2,1
2,0,4,3
2,0,6,9
2,0,8,28
2,0,10,89
2,0,12,286
2,0,14,924
2,0,16,2993
1,5,4,1
1,5,6,5
1,5,8,19
1,5,10,66
1,5,12,221
1,5,14,728
1,5,16,2380
1,4,3,1
1,4,5,5
1,4,7,19
1,4,9,66
1,4,11,221
1,4,13,728
1,4,15,2380
1,3,2,1
1,3,4,4
1,3,6,14
1,3,8,47
1,3,10,155
1,3,12,507
1,3,14,1652
1,3,16,5373
1,2,1,1
1,2,3,3
1,2,5,9
1,2,7,28
1,2,9,89
1,2,11,286
1,2,13,924
1,2,15,2993
1,1,0,1
1,1,2,2
1,1,4,5
1,1,6,14
1,1,8,42
1,1,10,131
1,1,12,417
1,1,14,1341
1,1,16,4334
1,0,1,1
1,0,3,2
1,0,5,5
1,0,7,14
1,0,9,42
1,0,11,131
1,0,13,417
1,0,15,1341
0,5,5,1
0,5,7,5
0,5,9,19
0,5,11,66
0,5,13,221
0,5,15,728
0,4,4,1
0,4,6,5
0,4,8,19
0,4,10,66
0,4,12,221
0,4,14,728
0,4,16,2380
0,3,3,1
0,3,5,4
0,3,7,14
0,3,9,47
0,3,11,155
0,3,13,507
0,3,15,1652
0,2,2,1
0,2,4,3
0,2,6,9
0,2,8,28
0,2,10,89
0,2,12,286
0,2,14,924
0,2,16,2993
0,1,1,1
0,1,3,2
0,1,5,5
0,1,7,14
0,1,9,42
0,1,11,131
0,1,13,417
0,1,15,1341
0,0,0,1
0,0,2,1
0,0,4,2
0,0,6,5
0,0,8,14
0,0,10,42
0,0,12,131
0,0,14,417
0,0,16,1341
)csv";

}  // namespace

const std::string& golden_table_csv(int h) {
  if (h == 4) return kGoldenH4;
  if (h == 5) return kGoldenH5;
  throw std::domain_error("golden_table_csv: expected tables exist for h = 4 and h = 5 only");
}

}  // namespace corridor
