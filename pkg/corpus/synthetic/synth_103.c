extern void print_int(int v);

int g0 = 7;
int g1 = 3;
int g2 = 1;
int a[8] = {9, 1, 6, 7, 5, 1, 7, 1};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = 0;
    if (t > 19) {
        return t - a[g1 & 7];
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = (v - v & a[v & 7]);
    if (t > 6) {
        return t - 9 | 4;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = (a[u & 7] | 8 < a[g1 & 7]);
    if (t > 9) {
        return t - a[u & 7] - a[g0 & 7];
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 7;
    x1 = 1;
    x2 = 9;
    x3 = 1;
    for (i0 = 0; i0 < 2; i0++) {
        g0 = (g1 - g1 | a[x2 & 7]);
        g0 = x1;
        x3 = g1;
        x0--;
    }
    print_int(0);
    a[g1 & 7] = 7 * x1;
    x2 = (7 - x2 < (6 < 2));
    i0 = 0;
    do {
        if (6 < 4) {
            x2 = (5 < a[g2 & 7]) % (1 + ((7) & 3));
            bump(x3 ^ a[g2 & 7]);
        }
        i0++;
    } while (i0 < 2);
    if ((1 < a[x3 & 7]) < 4) {
        i0 = 0;
        while (i0 < 0) {
            x1 = a[g2 & 7] | a[g0 & 7] % (1 + (((g2 < x2)) & 3));
            i0++;
        }
        print_int(g1);
        bump(a[x0 & 7] % (1 + ((g1) & 3)));
    } else {
        g0 = (x2 == x1 ^ x0);
        x1 = (g1 | 1);
    }
    if (x1 == 6) {
        g1 = (7 + 4 < 2 ^ x2);
        x2 = (8 + 0 | a[x1 & 7] ^ x0);
        x2 = (g1 | x3 == g1 % (1 + ((x1) & 3)));
    } else {
        print_int(a[g1 & 7] | g2);
        g1 = 7;
    }
    if (6 == 9) {
        i0 = 0;
        while (i0 < 2) {
            x1 = x2;
            print_int((2 == g2));
            x1 = a[g1 & 7];
            x1++;
            i0++;
        }
    } else {
        g2 = ((9 < 7) | (x3 == g2));
        g1 = (1 + x1 % (1 + ((a[g1 & 7]) & 3)));
    }
    g2 = (g0 % (1 + ((0) & 3)) | 4 / (1 + ((x2) & 3)));
    g2 = (g0 - 2 * a[g2 & 7]);
    x2 = (4 < (a[g1 & 7] == 2));
    i0 = 0;
    do {
        i1 = 0;
        do {
            if ((5 < g1) == 1) break;
            a[x3 & 7] = a[x3 & 7] - 2;
            i1++;
        } while (i1 < 0);
        x3 = (g0 % (1 + ((8) & 3)) ^ g1);
        x1 = h2(x0 / (1 + ((x3) & 3)), 0 % (1 + ((x1) & 3)));
        i0++;
    } while (i0 < 3);
    x0 = (x0 - 2 | a[g2 & 7]);
    i0 = 0;
    while (i0 < 2) {
        if ((g2 == a[g1 & 7]) < 6)
            g0 = (g1 * a[x3 & 7] - 8 / (1 + ((g0) & 3)));
        x3 = ((6 == g2) ^ g2 * 2);
        i0++;
    }
    print_int(a[x3 & 7] & g0);
    g0 = ((g0 == x1) == g2 * g0);
    print_int(a[x0 & 7] ^ g2);
    if (x3 > 7) {
        if (6 & g1 > 2) {
            g0 = x2 / (1 + ((a[x1 & 7]) & 3)) / (1 + ((g1 ^ 2) & 3));
            g2 = 8;
        }
    }
    g0 = g1;
    print_int(4);
    g1 = (g2 | 3 / (1 + ((a[x3 & 7]) & 3)));
    x3 = g0;
    g0 = g2;
    if (g1 != 5) {
        x3 = h0((8 == 8), x2 & x1);
        x2--;
        print_int(x3 ^ 6);
    } else {
        print_int(g1 & x0);
        a[9 & 7] = 0 ^ 8;
    }
    if (x0 | x1 == 0) {
        x0 = g0;
        i0 = 0;
        do {
            x1 = a[g1 & 7] - a[x0 & 7] % (1 + ((x1 / (1 + ((g2) & 3))) & 3));
            i0++;
        } while (i0 < 3);
        g0 = (a[x3 & 7] % (1 + ((0) & 3)) | a[x0 & 7] - g2);
        print_int(5);
    } else {
        x0 = (a[x0 & 7] == x0 / (1 + ((x3) & 3)));
    }
    g2 = g2;
    if ((5 < a[g0 & 7]) == 8) {
        x1--;
        x1 = (a[g1 & 7] & x1 < x1 % (1 + ((a[g2 & 7]) & 3)));
    } else {
        switch (a[g0 & 7] & 3) {
        case 0:
            g2 = 1;
        default:
            x3 = (3 % (1 + ((x0) & 3)) ^ a[x1 & 7] - g2);
        }
    }
    x0++;
    x0 = a[x2 & 7] & x0 % (1 + (((x0 == x1)) & 3));
    x1 = (g1 ^ a[x0 & 7] / (1 + ((4) & 3)));
    g2 = ((7 < a[x1 & 7]) * 3);
    if (9 & a[x1 & 7] < 2) {
        if (a[x3 & 7] | a[x3 & 7] == 1) {
            x2 = (a[g1 & 7] % (1 + ((x1) & 3)) < x3 + a[x3 & 7]);
        } else {
            x0 = g2;
        }
    }
    if ((a[g1 & 7] < 5) == 2) {
        g2 = a[g0 & 7];
        g1 = (5 % (1 + ((2) & 3)) ^ x0 + 4);
    }
    x1 = a[g1 & 7];
    switch (9 % (1 + ((a[x0 & 7]) & 3)) & 3) {
    case 0:
        print_int(x2);
        break;
    case 1:
        print_int(5 - x1);
        break;
    default:
        g1 = (g1 * a[g0 & 7] - a[x2 & 7] - 2);
    }
    x2--;
    switch (0 & 3) {
    case 0:
        x3 = (2 ^ 1 - 4);
        break;
    case 1:
        a[x3 & 7] = x2 / (1 + ((x3) & 3));
        break;
    case 2:
        x3++;
        break;
    default:
        print_int(a[g2 & 7] | x3);
    }
    if (x3 | a[g2 & 7] > 2) {
        g1 = x1;
        bump(x3 % (1 + ((9) & 3)));
        x2 = (a[x3 & 7] * g2 | x3);
    }
    a[g1 & 7] = a[x3 & 7] / (1 + ((x0) & 3));
    if (x0 | a[g2 & 7] > 2) {
        i0 = 0;
        do {
            x1 = 0;
            a[a[g1 & 7] & 7] = 4;
            g1 = 5;
            i0++;
        } while (i0 < 1);
        x1 = (4 & g2 == x3 / (1 + ((8) & 3)));
    } else {
        x1 = (a[x2 & 7] ^ 2);
    }
    bump((g2 < 4));
    x3 = (g0 | 3 * a[x3 & 7]);
    a[a[g0 & 7] & 7] = 8 + 1;
    g1 = 0;
    x0 = (a[x2 & 7] | a[g2 & 7] == 6 | 1);
    x0 = (x0 | a[g2 & 7] % (1 + ((g0) & 3)));
    bump((a[x0 & 7] == 9));
    x0 = h2(g1 / (1 + ((a[g1 & 7]) & 3)), g1 & 9);
    i0 = 0;
    do {
        if (x1 != 8) {
            print_int((a[g2 & 7] < g2));
        }
        x3 = h1(g0 % (1 + ((6) & 3)), x2);
        i0++;
    } while (i0 < 2);
    bump(a[x3 & 7] + g1);
    g1 = (a[g1 & 7] - 4);
    x2 = h0(x1 | x2, 1 - a[x0 & 7]);
    g0 = (1 & x0 + g1);
    x3 = h0(g1 & g2, (a[x2 & 7] == 1));
    for (i0 = 0; i0 < 3; i0++) {
        print_int(a[x3 & 7]);
        x0 = ((x0 == a[x0 & 7]) & 2);
    }
    for (i0 = 0; i0 < 0; i0++) {
        x2 = 0 % (1 + ((a[g0 & 7]) & 3)) % (1 + ((a[x0 & 7] ^ 9) & 3));
        g2 = (4 / (1 + ((3) & 3)) + a[g1 & 7] - x1);
        a[a[g1 & 7] & 7] = a[x0 & 7] - a[g2 & 7];
        x2--;
        g0 = x0;
    }
    i0 = 0;
    while (i0 < 3) {
        a[g0 & 7] = 5 | a[g2 & 7];
        if (x2 | a[x3 & 7] == 7) {
            g0 = (g1 | 7 - x2);
            x1++;
        }
        i0++;
    }
    i0 = 0;
    while (i0 < 3) {
        if (a[x1 & 7] & a[x2 & 7] > 3) {
            x0 = (x3 / (1 + ((g1) & 3)) ^ 6 * x2);
            x1 = x3;
        } else {
            print_int(1 + g0);
            x0 = x2;
        }
        i0++;
    }
    a[x1 & 7] = 8 | g1;
    x2 = x1 / (1 + (((x1 < a[g1 & 7])) & 3));
    print_int(7);
    x2--;
    print_int((6 < 9));
    x2 = h2(a[x2 & 7], (2 < 9));
    x3 = a[g2 & 7];
    x3 = (5 | x2 == x3 - g1);
    x1 = x3;
    if (x1 ^ a[x3 & 7] < 9) {
        x0 = h1(g0, 9 & g2);
        x2 = x2;
        bump(x2 - 8);
        if (x2 < 1) {
            g2 = a[x2 & 7];
            x3 = a[x0 & 7];
        }
    }
    g0 = g0;
    i0 = 0;
    while (i0 < 1) {
        if (8 == 3) break;
        if ((a[g2 & 7] == x3) == 6)
            a[5 & 7] = 9;
        x0 = h1(x1 - a[x1 & 7], x2 % (1 + ((g2) & 3)));
        g0 = (g0 ^ a[x2 & 7]);
        x3 = a[g0 & 7];
        i0++;
    }
    g0 = (a[x3 & 7] == 1 ^ 0);
    for (i0 = 0; i0 < 2; i0++) {
        print_int((a[x2 & 7] == x3));
    }
    if (4 + x1 < 8) {
        a[4 & 7] = g2 - x0;
        x2 = g1;
        g0 = a[x3 & 7];
        g1 = (5 ^ a[g0 & 7] & 1 + a[g2 & 7]);
    }
    bump((x3 == g2));
    x2 = (3 * a[x1 & 7] < 8 ^ 9);
    x2 = h2(x3, a[x2 & 7] & a[g2 & 7]);
    g0 = x0;
    g1 = x3;
    for (i0 = 0; i0 < 2; i0++) {
        g1 = (x2 / (1 + ((g2) & 3)) | a[x2 & 7]);
        if ((g1 == a[g0 & 7]) == 0) continue;
        g0 = x2;
    }
    if (g2 > 8) {
        i0 = 0;
        do {
            x2 = (g0 + g1 * 1 + 2);
            g2 = (x1 | g0 < 9 * x1);
            i0++;
        } while (i0 < 0);
    } else {
        g0 = (g1 ^ (x0 == g2));
    }
    g2 = (g1 ^ 6 | (g1 < x0));
    a[g0 & 7] = x0;
    i0 = 0;
    do {
        for (i1 = 0; i1 < 3; i1++) {
            x0 = g0;
            x1 = a[g2 & 7] / (1 + ((0 * a[g1 & 7]) & 3));
        }
        x0 = 2;
        x0 = (7 + x2);
        i0++;
    } while (i0 < 1);
    if (a[x3 & 7] > 3) {
        switch (5 - 3 & 3) {
        case 0:
            x3 = a[g1 & 7];
        default:
            x2 = ((a[x1 & 7] < a[x3 & 7]) & 5 - 1);
        }
        x3 = h1(x3 / (1 + ((8) & 3)), 8 & x2);
    } else {
        x0 = 9;
        bump((a[g2 & 7] < a[g0 & 7]));
    }
    if (1 == 3) {
        x2 = 8;
        g1 = (a[g2 & 7] & x2 | x3);
    }
    if (a[x3 & 7] == 0) {
        i0 = 0;
        do {
            g0 = (a[x0 & 7] ^ x2 * 4 * a[g0 & 7]);
            x0 = a[x2 & 7];
            g1 = (g0 & a[x3 & 7] + a[g1 & 7]);
            i0++;
        } while (i0 < 0);
    } else {
        a[a[g2 & 7] & 7] = g0 * 4;
    }
    if (x1 ^ a[g2 & 7] > 4) {
        g2 = (a[x2 & 7] ^ 2);
    } else {
        g1 = g0;
        x2 = (0 / (1 + ((9) & 3)) & x3 | g0);
        a[x2 & 7] = (a[x3 & 7] < 1);
    }
    i0 = 0;
    do {
        if ((x3 < g2) != 3) {
            x1++;
        } else {
            x3 = h0(1 % (1 + ((g1) & 3)), 3 - 0);
        }
        i0++;
    } while (i0 < 3);
    g2 = (g1 + a[x3 & 7] == 9 | a[g0 & 7]);
    i0 = 0;
    while (i0 < 1) {
        i1 = 0;
        while (i1 < 2) {
            g2 = a[x2 & 7];
            if (a[x0 & 7] ^ a[x0 & 7] == 3) break;
            i1++;
        }
        i0++;
    }
    x0 = g0;
    g2 = (a[x1 & 7] & a[g1 & 7] * 0);
    x0 = h1(x2 + x2, g1);
    bump(x0);
    i0 = 0;
    do {
        if (1 - 4 == 2) break;
        i0++;
    } while (i0 < 3);
    x0 = h1(0 | x3, a[x3 & 7] ^ x1);
    for (i0 = 0; i0 < 2; i0++) {
        if ((x3 < x3) == 5) {
            a[9 & 7] = x0 ^ g2;
            x1++;
        } else {
            print_int((x1 < 0));
        }
    }
    x2 = h2(5, 4 - a[g2 & 7]);
    x3 = (x1 & a[x2 & 7] / (1 + ((a[x0 & 7]) & 3)));
    x1++;
    print_int(a[x0 & 7] - g1);
    for (i0 = 0; i0 < 0; i0++) {
        for (i1 = 0; i1 < 1; i1++) {
            x3 = h2(8, g1);
            x2 = a[x3 & 7];
        }
        g2 = (a[x1 & 7] % (1 + ((x3) & 3)) | (g1 == 9));
        x2 = x0 - a[x0 & 7] / (1 + ((a[g0 & 7] * 4) & 3));
        if ((g2 < a[g0 & 7]) == 1) break;
    }
    a[a[g1 & 7] & 7] = x1;
    x2 = h1(x3, g2);
    g2 = (a[g1 & 7] - 8 < a[x3 & 7] * a[x1 & 7]);
    bump(g2);
    g0 = (2 | 3 ^ a[x2 & 7]);
    for (i0 = 0; i0 < 3; i0++) {
        i1 = 0;
        do {
            x3 = x0;
            i1++;
        } while (i1 < 3);
        if ((x0 == g0) == 3) break;
    }
    if (a[g1 & 7] & x1 == 6) {
        switch (x2 & 3) {
        case 0:
            x1 = (x0 / (1 + ((x0) & 3)) < (x2 < x3));
        default:
            g0 = (0 / (1 + ((0) & 3)) ^ 8 - 0);
        }
    }
    x0++;
    x3 = x1;
    print_int(g1);
    switch (7 & 3) {
    case 0:
        a[x3 & 7] = x1 & a[g2 & 7];
        break;
    default:
        g0 = g2;
    }
    x1 = (x0 | a[x3 & 7] * x1 % (1 + ((a[x3 & 7]) & 3)));
    x3 = (4 < a[x0 & 7]) % (1 + ((g1 / (1 + ((a[x3 & 7]) & 3))) & 3));
    bump(x0 - x3);
    g1 = (4 < x0 * a[x3 & 7]);
    bump(9 * 5);
    for (i0 = 0; i0 < 0; i0++) {
        if (x0 & 0 < 6)
            x2 = (1 & x1 * x0);
        x3 = 8 / (1 + ((x2) & 3)) / (1 + ((g1 & g2) & 3));
        if (x2 == 2) break;
    }
    i0 = 0;
    do {
        switch (0 & 3) {
        case 0:
            g0 = a[g0 & 7];
            break;
        case 1:
            g0 = 1;
            break;
        case 2:
            x3 = a[x2 & 7];
        default:
            g2 = (5 - x2 ^ a[g1 & 7] + 3);
        }
        print_int(x0 - g1);
        i0++;
    } while (i0 < 1);
    i0 = 0;
    do {
        if (a[g2 & 7] & 0 == 3) break;
        print_int(4 ^ a[g2 & 7]);
        switch (g0 ^ 9 & 3) {
        case 0:
            g0 = 4 / (1 + ((g0) & 3)) / (1 + ((a[g2 & 7] ^ a[g0 & 7]) & 3));
        case 1:
            g0 = (x2 + a[x1 & 7] - (a[g0 & 7] == x1));
            break;
        default:
            g0 = x2;
        }
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 1; i0++) {
        if (4 / (1 + ((9) & 3)) == 3) break;
    }
    g2 = (3 | x2 - 4);
    i0 = 0;
    do {
        a[5 & 7] = 1 - 1;
        switch (0 & 3) {
        case 0:
            x1 = 0 | x3 / (1 + ((a[x3 & 7] / (1 + ((7) & 3))) & 3));
            break;
        case 1:
            bump(0);
            break;
        case 2:
            x2 = h0((2 < a[g0 & 7]), a[x2 & 7] | x3);
        default:
            x0 = a[x1 & 7] | x3 % (1 + ((a[x1 & 7]) & 3));
        }
        i0++;
    } while (i0 < 3);
    if (3 / (1 + ((7) & 3)) > 3) {
        x1 = g1;
        x1 = a[g0 & 7];
        a[8 & 7] = a[x2 & 7] - x0;
        g2 = x1;
    } else {
        print_int(x2);
        x3 = (7 ^ 9 * g2);
    }
    x3 = (a[x3 & 7] | (6 < a[x1 & 7]));
    x0 = a[x3 & 7];
    i0 = 0;
    while (i0 < 3) {
        g1 = a[x2 & 7];
        x1 = ((x1 == 1) + g1 | 5);
        i0++;
    }
    x2 = ((g2 < a[x2 & 7]) ^ g2 * a[g0 & 7]);
    if (x2 == 0) {
        print_int(0 & x0);
        for (i0 = 0; i0 < 3; i0++) {
            a[g0 & 7] = 3 % (1 + ((g1) & 3));
            x0 = x0;
        }
        g1 = a[g0 & 7];
    }
    g2 = (a[x3 & 7] ^ 4 * 5);
    a[a[x0 & 7] & 7] = x0 * g0;
    x3++;
    a[7 & 7] = 6 & a[x3 & 7];
    x1--;
    if (a[g0 & 7] < 6) {
        x0 = (4 * 7 < x2);
        a[4 & 7] = g2 * a[x0 & 7];
        if (g2 > 7) {
            x3++;
            x2 = (a[x3 & 7] < g1);
        }
    }
    x0 = 4 / (1 + ((x3 - x3) & 3));
    g1 = 5;
    g1 = 5;
    if (x0 / (1 + ((9) & 3)) > 7) {
        g2 = 0 / (1 + ((a[g1 & 7]) & 3));
        x2++;
        x0--;
    } else {
        g0 = x2;
        bump(a[x1 & 7]);
        a[a[g1 & 7] & 7] = x3 & g1;
        bump(a[g1 & 7] & x3);
    }
    print_int(x2 - a[g0 & 7]);
    for (i0 = 0; i0 < 3; i0++) {
        g1 = (0 == 1) % (1 + (((g2 == x3)) & 3));
        x3--;
    }
    x0 = x1;
    switch (x0 & 3) {
    case 0:
        x3 = 1;
        break;
    case 1:
        g1 = (x0 == x3);
        break;
    default:
        x3 = (x3 | 9 | a[x1 & 7]);
    }
    x3 = (7 % (1 + ((a[x2 & 7]) & 3)) + x2 / (1 + ((0) & 3)));
    a[x2 & 7] = a[x0 & 7];
    if (g0 < 6) {
        for (i0 = 0; i0 < 2; i0++) {
            x3 = x2;
        }
        g2 = (a[g0 & 7] / (1 + ((g1) & 3)) < 4 / (1 + ((x2) & 3)));
    }
    i0 = 0;
    do {
        g1 = 5 / (1 + ((8) & 3)) / (1 + ((0) & 3));
        if (2 & x3 == 2) break;
        x2 = x2;
        i0++;
    } while (i0 < 0);
    g1 = 1;
    i0 = 0;
    while (i0 < 0) {
        x2 = (x2 + a[g0 & 7] | 8);
        g2 = (x1 - (x0 == g1));
        x2 = a[g2 & 7];
        x2 = 4;
        i0++;
    }
    a[g0 & 7] = (a[g1 & 7] < a[x1 & 7]);
    g2 = (g0 / (1 + ((x2) & 3)) ^ 3 * g1);
    if (4 ^ x3 == 5) {
        a[9 & 7] = g2 + x1;
        i0 = 0;
        while (i0 < 2) {
            x1++;
            x1 = (1 + g2 == x3);
            i0++;
        }
        x2 = (a[g1 & 7] % (1 + ((g2) & 3)) ^ 6);
    } else {
        if (x1 * 4 > 9)
            g0 = a[x3 & 7];
        a[a[g1 & 7] & 7] = x0 & a[x3 & 7];
    }
    if ((x3 < g0) != 7) {
        switch (1 - 8 & 3) {
        case 0:
            g0 = 3;
        case 1:
            x3--;
            break;
        default:
            print_int((x3 < x3));
        }
    } else {
        for (i0 = 0; i0 < 0; i0++) {
            if (a[g1 & 7] ^ 2 == 0) break;
            a[g2 & 7] = a[x3 & 7];
            if (a[x3 & 7] == 3) continue;
        }
    }
    for (i0 = 0; i0 < 2; i0++) {
        x0 = a[g1 & 7];
        a[7 & 7] = (g1 == x2);
        g1 = (2 / (1 + ((0) & 3)) - a[x2 & 7]);
        x3++;
    }
    x0--;
    if (a[x1 & 7] + x0 > 5) {
        print_int(3 ^ 2);
        print_int((5 < a[x0 & 7]));
    } else {
        x0 = (9 + x0 * (x1 < a[x3 & 7]));
        x2 = 3;
        g0 = (x0 | 3);
        bump(a[x3 & 7]);
    }
    x1 = (x3 / (1 + ((x1) & 3)) + a[g2 & 7]);
    x1 = (g2 | (x0 < 2));
    i0 = 0;
    do {
        x0 = 2;
        i0++;
    } while (i0 < 1);
    if (a[x2 & 7] & 9 != 6) {
        g0 = (x3 == 9) / (1 + ((a[x1 & 7] | g0) & 3));
        g2 = (x0 & a[x0 & 7] * a[x0 & 7] % (1 + ((a[x2 & 7]) & 3)));
    }
    g2 = (x3 * a[g1 & 7] | x1);
    switch (x0 & a[x0 & 7] & 3) {
    case 0:
        g1 = (8 / (1 + ((6) & 3)) ^ a[x0 & 7] % (1 + ((x3) & 3)));
        x0 = (x3 * g0 / (1 + ((x3) & 3)));
        break;
    default:
        print_int(8 - x2);
    }
    g0 = g1;
    for (i0 = 0; i0 < 2; i0++) {
        x2++;
        print_int(8 / (1 + ((x2) & 3)));
    }
    if (2 == 9) {
        g0 = (a[x3 & 7] & g2 & a[x2 & 7] / (1 + ((a[g0 & 7]) & 3)));
        a[x1 & 7] = 9;
    }
    i0 = 0;
    while (i0 < 1) {
        x3--;
        x1 = (g2 ^ x3 & (a[g1 & 7] == a[g1 & 7]));
        i0++;
    }
    print_int(x1 % (1 + ((a[g0 & 7]) & 3)));
    switch (9 / (1 + ((1) & 3)) & 3) {
    case 0:
        x3 = 2;
    case 1:
        x3 = h1(x2, (x2 < a[g0 & 7]));
    default:
        x2 = (7 == 0 | x0);
    }
    x0 = h0(0, x1 - a[x0 & 7]);
    g0 = (9 - 5 & a[x2 & 7]);
    if (a[x3 & 7] > 9)
        x2 = (7 - x2);
    if (a[x2 & 7] > 6) {
        x2--;
        a[g2 & 7] = 4 - g2;
        if (a[x0 & 7] | g1 > 1) {
            x1 = (a[x1 & 7] + x1 & 3 / (1 + ((a[g2 & 7]) & 3)));
            x3 = 7;
            x3 = (g1 & 7 == (a[x3 & 7] == a[g0 & 7]));
        }
    }
    if ((a[g2 & 7] < a[g0 & 7]) == 1) {
        x2 = (5 - 2 * (a[x1 & 7] < a[x0 & 7]));
    }
    if (x2 < 0) {
        x1++;
        print_int(g0);
    }
    x3 = h2(a[x2 & 7] | x0, (a[g1 & 7] == x0));
    x3++;
    x2--;
    if (a[g0 & 7] + g2 > 9) {
        x1 = h2((a[g1 & 7] == a[x0 & 7]), x1 / (1 + ((7) & 3)));
        g2 = a[g0 & 7];
    }
    bump(9 * 6);
    i0 = 0;
    do {
        x2 = a[g1 & 7];
        x3 = (g2 + 0 ^ x3 * x2);
        i0++;
    } while (i0 < 0);
    x0--;
    x2 = (x2 * 6 & a[g0 & 7] * a[x1 & 7]);
    switch (3 / (1 + ((x0) & 3)) & 3) {
    case 0:
        x2--;
        bump(g0);
        break;
    case 1:
        x2--;
    default:
        print_int(g0 ^ 8);
    }
    g0 = ((0 == 2) - x0 + a[x2 & 7]);
    return (x0 + x1) & 255;
}
