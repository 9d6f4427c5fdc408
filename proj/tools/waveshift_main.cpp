#include "waveshift/io.hpp"
int main(){return 0;}
