extern void print_int(int v);

int g0 = 9;
int g1 = 3;
int g2 = 8;
int a[8] = {5, 7, 0, 8, 3, 9, 3, 4};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = (u * g1 & a[g2 & 7]);
    if (t > 14) {
        return t - (u < g0);
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = v;
    if (t > 13) {
        return t - 4 & u;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = 6;
    if (t > 3) {
        return t - 8;
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 5;
    x1 = 0;
    x2 = 5;
    x3 = 5;
    x2 = (x1 ^ a[x3 & 7]);
    switch (g2 * a[x2 & 7] & 3) {
    case 0:
        bump((g0 == g1));
        g1 = (a[g2 & 7] & 2 * a[x3 & 7] - a[x1 & 7]);
        x2 = (5 * g1 | a[x0 & 7]);
        break;
    case 1:
        x3 = a[x2 & 7];
        break;
    case 2:
        g1 = (x3 | 9 & x2);
        break;
    default:
        g0 = (x1 < 6);
    }
    if (g2 > 5)
        g0 = x0;
    bump(8);
    a[x2 & 7] = x3 + x2;
    x0 = a[x3 & 7] % (1 + (((g1 == x0)) & 3));
    switch (a[g1 & 7] & 3) {
    case 0:
        x3 = (g1 - a[g0 & 7] * a[g2 & 7] - g0);
        break;
    case 1:
        x0--;
        break;
    default:
        a[g2 & 7] = a[g1 & 7] * x1;
    }
    for (i0 = 0; i0 < 1; i0++) {
        switch (g0 & 3) {
        case 0:
            x0 = h0(a[x1 & 7], (2 == x0));
            break;
        case 1:
            x2 = (x2 < x0 * x1);
            break;
        case 2:
            x1--;
            break;
        default:
            x2 = (x3 == x3);
        }
    }
    switch (a[g2 & 7] + a[x2 & 7] & 3) {
    case 0:
        g0 = a[x3 & 7];
        break;
    default:
        a[a[x3 & 7] & 7] = a[g2 & 7] | a[x3 & 7];
    }
    x1 = (a[x0 & 7] + a[x3 & 7] * x3 - x3);
    x3--;
    a[a[g1 & 7] & 7] = 6;
    g2 = 4;
    switch (a[x0 & 7] + x0 & 3) {
    case 0:
        print_int(9);
        break;
    case 1:
        a[a[x1 & 7] & 7] = a[g1 & 7] % (1 + ((x0) & 3));
    case 2:
        g0 = 4;
    default:
        x1++;
    }
    bump((8 < a[x3 & 7]));
    i0 = 0;
    while (i0 < 0) {
        a[9 & 7] = g2;
        g0 = 8;
        i0++;
    }
    if (a[g0 & 7] == 5) {
        switch (1 / (1 + ((x0) & 3)) & 3) {
        case 0:
            print_int(x3);
        default:
            x1 = 7;
        }
        x1 = (2 ^ 0 * g1);
        x1++;
    }
    i0 = 0;
    do {
        if (g1 != 0) {
            if (a[g0 & 7] == 3) break;
            g1 = (x0 | 2 & 9);
        } else {
            g0 = (a[g0 & 7] * x0 | a[g2 & 7]);
            x1 = (a[g0 & 7] / (1 + ((g2) & 3)) == (g2 == x0));
            x2 = (x3 - a[g1 & 7] + 7);
        }
        i0++;
    } while (i0 < 3);
    a[x2 & 7] = g2 | a[x3 & 7];
    x2 = (2 ^ g2 * a[x0 & 7]);
    for (i0 = 0; i0 < 0; i0++) {
        a[5 & 7] = x2 / (1 + ((6) & 3));
        if (x0 & x2 == 1) continue;
        if (1 != 5) {
            g1 = (2 + 3);
        }
        x3--;
    }
    for (i0 = 0; i0 < 3; i0++) {
        g0 = x3;
        x3 = x3;
        x0 = a[g0 & 7];
    }
    if (x1 * 6 != 2) {
        g1 = (a[x0 & 7] | a[g2 & 7] - a[x1 & 7]);
        g1 = (a[x0 & 7] * a[g1 & 7] < 0);
        g1 = 0;
    } else {
        i0 = 0;
        while (i0 < 0) {
            x3 = h0(2 / (1 + ((4) & 3)), (1 == g1));
            i0++;
        }
    }
    x1 = (a[g1 & 7] == 2 & x2);
    x0 = g2;
    if (a[x2 & 7] + 0 < 1) {
        print_int(g2 ^ a[g1 & 7]);
        x1 = g0;
    } else {
        x2++;
        g1 = 7;
    }
    x2++;
    i0 = 0;
    while (i0 < 2) {
        g1 = g0;
        print_int(g1);
        print_int(0 & 3);
        x1 = (a[x2 & 7] ^ 4);
        i0++;
    }
    x2 = g1 / (1 + ((x0) & 3)) % (1 + ((x3) & 3));
    bump(g1 ^ a[g2 & 7]);
    x1 = (a[g1 & 7] == g0 * 4);
    g1 = 8;
    x2++;
    bump(0 - x3);
    x0 = (a[x3 & 7] == x3) % (1 + ((x1 / (1 + ((a[x2 & 7]) & 3))) & 3));
    x2++;
    x3++;
    x2 = (a[x0 & 7] == x3) % (1 + ((a[g1 & 7]) & 3));
    if (a[g2 & 7] / (1 + ((x2) & 3)) != 2) {
        for (i0 = 0; i0 < 2; i0++) {
            g1 = (x1 / (1 + ((8) & 3)) | a[g0 & 7] | 7);
        }
        bump((x2 == 3));
        g2 = 8;
    } else {
        g0 = (g0 % (1 + ((a[g2 & 7]) & 3)) - 1 + a[x0 & 7]);
        x1 = x0 % (1 + ((x1 | 7) & 3));
        g2 = ((g0 == 0) < 1);
    }
    print_int(a[x1 & 7] & 0);
    if (a[g1 & 7] ^ x3 == 4) {
        g1 = a[g0 & 7];
        bump(x1 & x3);
    }
    g1 = (g1 / (1 + ((4) & 3)) < a[g0 & 7] + 6);
    if (x1 | a[x0 & 7] > 0) {
        print_int(a[g2 & 7]);
    }
    a[g2 & 7] = a[g0 & 7] & a[g0 & 7];
    bump(7 % (1 + ((3) & 3)));
    x1 = x0;
    x0 = h1(g0, g1 + x3);
    if (g2 < 8) {
        x3 = (a[g1 & 7] / (1 + ((g0) & 3)) == (7 == g2));
        for (i0 = 0; i0 < 0; i0++) {
            if (5 == 0) break;
        }
        g0 = x2;
        g1 = (a[g1 & 7] - (x3 < a[g2 & 7]));
        x0 = (x1 - g2 < 5);
    }
    x3 = h2(a[g1 & 7] & a[g1 & 7], g1);
    g2 = (6 & x2 == g1);
    g0 = 4 - x3 / (1 + (((a[x3 & 7] < g0)) & 3));
    x2 = (g2 * a[x3 & 7] ^ x2 & g0);
    i0 = 0;
    do {
        x0 = h0(a[g1 & 7] & a[x3 & 7], x2);
        x3 = (a[x1 & 7] / (1 + ((x3) & 3)) - (4 == x0));
        i0++;
    } while (i0 < 3);
    i0 = 0;
    do {
        x0 = (a[x1 & 7] < 1);
        i0++;
    } while (i0 < 0);
    if (6 < 0) {
        print_int(a[g1 & 7] & x2);
        g2 = g0;
    } else {
        x0--;
        g2 = ((8 == g0) & g1 - x0);
        print_int((g1 < a[g0 & 7]));
    }
    bump(g2 & a[g2 & 7]);
    if (g2 * x2 < 3) {
        if (g0 != 1)
            x3++;
        a[a[x0 & 7] & 7] = g0 % (1 + ((a[g1 & 7]) & 3));
    } else {
        g1 = (a[g0 & 7] ^ x0 - 5 / (1 + ((x3) & 3)));
    }
    print_int(a[x2 & 7]);
    for (i0 = 0; i0 < 1; i0++) {
        x3 = 2;
        g0 = 4 / (1 + (((a[g0 & 7] == x0)) & 3));
    }
    i0 = 0;
    while (i0 < 2) {
        x3 = (g2 < 8) / (1 + ((a[x2 & 7] ^ a[g1 & 7]) & 3));
        i0++;
    }
    g2 = a[x0 & 7] | g0 % (1 + ((g1) & 3));
    x2 = a[g1 & 7];
    print_int(2 - a[x0 & 7]);
    x0--;
    g2 = g2;
    if (x3 | 6 < 6) {
        x0--;
        g0 = ((x3 == a[x1 & 7]) | g0);
        for (i0 = 0; i0 < 1; i0++) {
            x0++;
        }
        x0 = h1(x2 / (1 + ((a[g0 & 7]) & 3)), a[x1 & 7]);
    }
    i0 = 0;
    do {
        x3 = g2;
        a[7 & 7] = (0 < 2);
        i0++;
    } while (i0 < 0);
    i0 = 0;
    while (i0 < 3) {
        a[a[x3 & 7] & 7] = a[x2 & 7] * x1;
        i0++;
    }
    x0 = x2 % (1 + ((a[g1 & 7] * x2) & 3));
    g1 = x3 / (1 + ((x2 & a[x2 & 7]) & 3));
    a[g0 & 7] = x2;
    g0 = (a[g1 & 7] - a[g2 & 7]);
    switch (2 & 3) {
    case 0:
        if (g0 | x0 == 1) {
            print_int((4 < x0));
        }
        print_int(a[g2 & 7]);
    case 1:
        x0 = h2((3 < 5), (x0 < x1));
        break;
    case 2:
        g0 = (x2 ^ x0 & 0 / (1 + ((g1) & 3)));
        break;
    default:
        x2 = (x3 - x2 | a[x3 & 7]);
    }
    x3--;
    print_int(4);
    switch (2 * g0 & 3) {
    case 0:
        x0 = (4 + a[x3 & 7] / (1 + ((g0) & 3)));
        x1 = (x0 ^ g1 * x3);
        x3--;
        break;
    case 1:
        g2 = (8 ^ a[g1 & 7] ^ g0 * g1);
        break;
    case 2:
        g0 = (x0 ^ 5 & x3 & a[g1 & 7]);
        break;
    default:
        x3 = a[x2 & 7];
    }
    x2 = (a[x3 & 7] - a[x3 & 7]);
    x2++;
    x2 = x3;
    i0 = 0;
    do {
        print_int(0 ^ x3);
        g0 = a[x2 & 7] / (1 + ((x3) & 3)) / (1 + ((a[x1 & 7] * g2) & 3));
        i0++;
    } while (i0 < 1);
    g2 = (x1 & x3 & a[g1 & 7]);
    print_int((g2 < a[g1 & 7]));
    a[9 & 7] = (a[g0 & 7] < a[x3 & 7]);
    a[a[x3 & 7] & 7] = x1 / (1 + ((x1) & 3));
    print_int(g2);
    x0 = (5 * a[g0 & 7] < x0 / (1 + ((a[g1 & 7]) & 3)));
    for (i0 = 0; i0 < 3; i0++) {
        g0 = (g2 | a[x3 & 7] | g1 ^ a[g2 & 7]);
        i1 = 0;
        while (i1 < 1) {
            print_int(a[x3 & 7] % (1 + ((g1) & 3)));
            i1++;
        }
        if (x3 / (1 + ((5) & 3)) == 1) continue;
        x2 = 1 / (1 + ((x2) & 3));
    }
    g2 = (g1 % (1 + ((g1) & 3)) ^ a[x3 & 7] - 3);
    g1 = (2 / (1 + ((a[x0 & 7]) & 3)) + x2 - a[g1 & 7]);
    if (g2 ^ x3 > 5) {
        x1 = (x1 / (1 + ((a[x3 & 7]) & 3)) == x0);
        a[g1 & 7] = 3 / (1 + ((g2) & 3));
    }
    g2 = g0;
    i0 = 0;
    while (i0 < 0) {
        if ((7 < a[g1 & 7]) == 3) break;
        if (g2 - x2 == 1) break;
        i0++;
    }
    if (g2 - a[g0 & 7] != 6)
        a[7 & 7] = g2 + x2;
    a[g1 & 7] = g1;
    x3 = x2;
    x1 = 6;
    g0 = (a[g2 & 7] | (3 == a[g2 & 7]));
    if (9 ^ a[g0 & 7] < 5) {
        print_int(g2);
        x1 = (a[x2 & 7] / (1 + ((g0) & 3)) == g2);
        x3++;
    }
    x2 = (g1 ^ (a[x3 & 7] < 4));
    x3 = x3 & a[x0 & 7] % (1 + ((x0 - x0) & 3));
    g1 = g1 / (1 + (((g2 < a[g0 & 7])) & 3));
    x3 = g2 % (1 + ((a[x0 & 7]) & 3));
    for (i0 = 0; i0 < 2; i0++) {
        g1 = (x3 | a[g1 & 7] / (1 + ((a[x3 & 7]) & 3)));
        a[3 & 7] = g1 ^ g0;
        if (4 == 1) break;
        print_int(a[g2 & 7] | a[g2 & 7]);
    }
    x2++;
    x0 = x0;
    if ((7 < a[g1 & 7]) > 4) {
        if ((x2 < 6) > 6) {
            i0 = 0;
            do {
                a[6 & 7] = x2 + a[x1 & 7];
                g1 = (6 & x2 == g2 + 6);
                i0++;
            } while (i0 < 1);
        }
    } else {
        g0 = g2;
        g1 = a[g2 & 7];
        x0 = x0;
    }
    x1 = h0((x3 < a[x0 & 7]), x2 ^ x0);
    g0 = (g2 | 9 == a[g2 & 7]);
    x1 = h2(3 ^ 6, a[x3 & 7] * 9);
    g0 = a[x0 & 7];
    g1 = a[x2 & 7];
    if (4 < 8)
        x0 = (g1 - a[g0 & 7] & a[x3 & 7]);
    if (x3 > 5) {
        print_int(g2 ^ 3);
        x0 = 8 - 8 / (1 + ((x1) & 3));
        if (g1 / (1 + ((x1) & 3)) != 0) {
            x1 = ((1 == x2) + a[x0 & 7]);
        } else {
            g2 = a[g0 & 7] % (1 + ((a[g1 & 7]) & 3));
            g1 = ((g0 < g0) + a[x3 & 7]);
        }
    }
    switch (a[x1 & 7] & 3) {
    case 0:
        x0 = (a[g0 & 7] - x1);
    case 1:
        x3 = g1 % (1 + ((1) & 3));
        break;
    default:
        bump(x0);
    }
    if (a[x2 & 7] * x2 < 0) {
        x2 = 6;
        for (i0 = 0; i0 < 2; i0++) {
            g1 = (7 ^ g1 & g1 + 7);
        }
        print_int(a[x2 & 7] | x0);
        print_int(g0);
        x3 = a[g2 & 7] % (1 + ((5) & 3));
    }
    if (x2 % (1 + ((a[x0 & 7]) & 3)) > 0) {
        if (g0 < 4) {
            i0 = 0;
            while (i0 < 3) {
                x2 = (6 + a[g1 & 7] == (3 < x0));
                i0++;
            }
            x0 = a[x0 & 7];
        }
        x1++;
    }
    x2 = (7 == x2);
    print_int(g2 & g2);
    if (g1 | x0 < 3) {
        if (x2 / (1 + ((7) & 3)) != 7) {
            x2--;
            bump(a[x1 & 7]);
        } else {
            x2 = ((8 < a[x0 & 7]) + 0);
        }
        a[g0 & 7] = 2 & a[g1 & 7];
    }
    g2 = x3;
    x3 = a[g0 & 7] ^ x1 % (1 + ((a[x2 & 7]) & 3));
    x0 = (x2 * g2 * 6 | a[g2 & 7]);
    if (g0 | 3 < 7) {
        g1 = g1 | 3 % (1 + ((x1 * a[g1 & 7]) & 3));
    }
    x2 = (g2 - x3 * g2 % (1 + ((a[g2 & 7]) & 3)));
    i0 = 0;
    do {
        if (x1 > 8) {
            i1 = 0;
            do {
                if (4 / (1 + ((9) & 3)) == 3) break;
                i1++;
            } while (i1 < 0);
            g1 = (x2 ^ a[x3 & 7] & g1 / (1 + ((x3) & 3)));
        } else {
            g2 = (5 * 0);
        }
        i0++;
    } while (i0 < 2);
    x0 = (a[x2 & 7] / (1 + ((2) & 3)) - a[x1 & 7]);
    x2 = (3 % (1 + ((2) & 3)) + 6);
    x3 = g1;
    a[x3 & 7] = (8 < 2);
    switch (a[g2 & 7] | 8 & 3) {
    case 0:
        g1 = (x3 & 2);
        print_int(6);
        break;
    default:
        x2--;
    }
    if (x3 < 9) {
        print_int(x1 | 8);
    } else {
        print_int((x0 < 4));
        print_int((x3 < 2));
        a[a[g2 & 7] & 7] = g1 & x1;
    }
    for (i0 = 0; i0 < 2; i0++) {
        i1 = 0;
        while (i1 < 0) {
            print_int(g1 ^ g1);
            g0 = x2;
            i1++;
        }
    }
    x2 = (a[g1 & 7] % (1 + ((x1) & 3)) | 1 + 9);
    if ((g2 < 7) != 6) {
        g2 = (x1 ^ (g1 == 3));
        x2 = (a[x1 & 7] * g0 ^ g1 + 8);
    } else {
        i0 = 0;
        do {
            x0 = (g1 == a[x2 & 7]);
            x1--;
            i0++;
        } while (i0 < 0);
    }
    if (3 - g0 > 8) {
        x1 = 2;
        g1 = a[x2 & 7];
        x0++;
        i0 = 0;
        while (i0 < 2) {
            x0++;
            x2 = (a[x3 & 7] * a[x1 & 7] ^ g0);
            i0++;
        }
    }
    x3 = (x2 ^ g1 | a[x1 & 7] ^ a[x2 & 7]);
    x0--;
    switch (g1 & 3) {
    case 0:
        x2 = g0;
        g2 = a[g2 & 7];
    case 1:
        bump(x1 & 0);
        break;
    default:
        g1 = a[g0 & 7];
    }
    i0 = 0;
    while (i0 < 2) {
        bump(g0 - 9);
        i0++;
    }
    x3 = a[x2 & 7];
    if (g2 | a[g0 & 7] != 3) {
        x2 = (7 | g2 * g1);
    }
    for (i0 = 0; i0 < 0; i0++) {
        g2 = 7;
        x1 = (x1 | x3 == x1 % (1 + ((x3) & 3)));
    }
    i0 = 0;
    do {
        x0++;
        i1 = 0;
        do {
            x0--;
            x3 = (g1 * 6 - x3);
            g1 = (6 + g1 + x2);
            i1++;
        } while (i1 < 1);
        i0++;
    } while (i0 < 3);
    x0--;
    for (i0 = 0; i0 < 2; i0++) {
        x2 = (a[g1 & 7] - g2 - (a[g2 & 7] == a[x0 & 7]));
        g1 = (5 * 3 & x0);
        a[g1 & 7] = 3 * x2;
        x2++;
    }
    a[g1 & 7] = 4;
    x1 = ((x0 == x1) ^ a[g0 & 7] - a[x3 & 7]);
    x3 = 0;
    g2 = ((g1 < 9) - a[x3 & 7] - 2);
    x2 = ((7 == g1) - 6 * 4);
    for (i0 = 0; i0 < 3; i0++) {
        x3 = (x2 == x1);
        g1 = (g2 | x3 ^ a[g2 & 7] % (1 + ((x2) & 3)));
        x2++;
        print_int(g0 % (1 + ((a[g1 & 7]) & 3)));
        x0 = x3 % (1 + ((x2) & 3)) % (1 + ((g2 ^ x0) & 3));
    }
    i0 = 0;
    do {
        print_int(a[g0 & 7] ^ x2);
        i1 = 0;
        while (i1 < 1) {
            g1 = (1 / (1 + ((a[x0 & 7]) & 3)) & 4 + g2);
            i1++;
        }
        bump(x0 / (1 + ((x0) & 3)));
        i0++;
    } while (i0 < 2);
    if (x2 * 4 > 5) {
        x1 = 2 - g2 / (1 + ((a[x3 & 7] + 6) & 3));
        for (i0 = 0; i0 < 1; i0++) {
            a[x1 & 7] = (x0 < 4);
            x1 = (a[g0 & 7] & a[g0 & 7] ^ x2);
        }
        bump(g1 * 3);
        x3 = (g1 - 7 ^ a[x0 & 7] & x1);
    } else {
        x3 = (a[x1 & 7] - (g0 == x0));
        g2 = (x1 / (1 + ((g0) & 3)) - x2 - 0);
    }
    if (1 == 5) {
        x2 = (a[x0 & 7] + a[g1 & 7] < x0);
        g0 = (a[g2 & 7] & a[g2 & 7] == a[x1 & 7] + x3);
        x3--;
        x2 = (7 % (1 + ((5) & 3)) < 7);
    } else {
        g0 = 9 / (1 + ((a[g2 & 7] | x3) & 3));
        g1 = g0 * x0 % (1 + ((g2 - 6) & 3));
        a[a[g0 & 7] & 7] = a[x3 & 7] - 4;
        print_int(a[x3 & 7] & 5);
    }
    i0 = 0;
    do {
        x1 = 6;
        if ((2 == g0) < 5) {
            i1 = 0;
            while (i1 < 2) {
                x2 = 7;
                i1++;
            }
            if (g2 | x3 == 3) break;
        }
        i0++;
    } while (i0 < 1);
    if (2 % (1 + ((x1) & 3)) == 0) {
        print_int(x1 - 4);
        g0 = a[x2 & 7];
    }
    if (a[g0 & 7] < 8) {
        print_int(a[x2 & 7]);
        g0 = (a[x1 & 7] * a[x2 & 7] + a[x2 & 7]);
    }
    for (i0 = 0; i0 < 1; i0++) {
        x1++;
    }
    g2 = (x1 % (1 + ((x3) & 3)) == x2 % (1 + ((3) & 3)));
    i0 = 0;
    do {
        g0 = (6 & a[x1 & 7] | 7);
        x1 = h2(3, a[g0 & 7] & x2);
        i0++;
    } while (i0 < 3);
    x0 = (x1 == a[g2 & 7] / (1 + ((1) & 3)));
    if (4 ^ x3 == 1) {
        x2 = g2;
    } else {
        a[g2 & 7] = g0;
        g1 = 1;
        print_int(a[x2 & 7]);
    }
    x1--;
    switch (4 & 3) {
    case 0:
        a[a[g1 & 7] & 7] = a[x3 & 7] + 7;
        break;
    default:
        a[g2 & 7] = a[g1 & 7];
    }
    x2 = 6;
    print_int(a[x0 & 7] ^ g0);
    a[5 & 7] = 1;
    if (2 % (1 + ((g2) & 3)) != 5) {
        g0 = (2 * x2 ^ g1 | 2);
        x3++;
        x0++;
    } else {
        if (a[g0 & 7] & x3 != 8) {
            a[a[x2 & 7] & 7] = a[g1 & 7];
            x1 = h0(6 % (1 + ((g2) & 3)), a[g0 & 7] | g2);
        }
        a[a[g1 & 7] & 7] = 8 ^ 5;
    }
    x2 = ((x2 == x2) - a[g2 & 7] + 6);
    if (g1 & a[g0 & 7] < 4) {
        for (i0 = 0; i0 < 0; i0++) {
            x2++;
            g0 = (a[g2 & 7] - a[x2 & 7] < (0 < 6));
        }
        bump(x2 / (1 + ((x3) & 3)));
        x0--;
    }
    x0++;
    g0 = (g2 % (1 + ((x1) & 3)) - x2 | x0);
    x1 = ((x0 < 2) + 1 % (1 + ((a[g1 & 7]) & 3)));
    if (a[g2 & 7] & x0 < 5)
        g1 = a[x0 & 7];
    i0 = 0;
    while (i0 < 2) {
        bump(x3);
        x3--;
        if (g1 + x3 == 1) break;
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        print_int(6 + 5);
    }
    print_int(a[g1 & 7]);
    switch (g0 * 9 & 3) {
    case 0:
        x1 = (a[x0 & 7] * a[x2 & 7] & 9);
        bump(x0 % (1 + ((g1) & 3)));
    default:
        x3 = 6;
    }
    x1 = x0;
    x2 = x3;
    for (i0 = 0; i0 < 1; i0++) {
        if (a[x0 & 7] == 0) break;
        x2 = a[x0 & 7];
    }
    if (x3 ^ 6 != 9)
        x3 = (x1 + g1 | 1);
    i0 = 0;
    do {
        x0 = x3;
        x1++;
        a[x1 & 7] = (9 == x1);
        a[8 & 7] = 1 & x2;
        g2 = (6 < 5 + a[g2 & 7]);
        i0++;
    } while (i0 < 2);
    for (i0 = 0; i0 < 0; i0++) {
        a[9 & 7] = x2;
        bump(8 ^ x2);
    }
    g2 = (5 - a[x2 & 7] - 2 / (1 + ((a[g0 & 7]) & 3)));
    for (i0 = 0; i0 < 3; i0++) {
        switch (a[x3 & 7] | a[x3 & 7] & 3) {
        case 0:
            g2 = g2 + g1 % (1 + ((g1 - a[g2 & 7]) & 3));
            break;
        default:
            print_int(g1 | g1);
        }
    }
    a[a[x2 & 7] & 7] = x2 - g0;
    print_int(a[g1 & 7] ^ 9);
    x2 = a[g2 & 7];
    x0--;
    print_int(x2);
    bump(0);
    x2 = (a[x0 & 7] % (1 + ((a[x1 & 7]) & 3)) & (g2 < g2));
    x3 = (x1 - a[x3 & 7] < 0 & g2);
    return (x0 + x1) & 255;
}
