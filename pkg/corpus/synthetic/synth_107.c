extern void print_int(int v);

int g0 = 3;
int g1 = 9;
int g2 = 9;
int a[8] = {6, 7, 4, 2, 6, 8, 1, 4};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = g2;
    if (t > 4) {
        return t - v / (1 + ((g1) & 3));
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = g1;
    if (t > 8) {
        return t - u;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = u;
    if (t > 1) {
        return t - v | g2;
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 6;
    x1 = 4;
    x2 = 2;
    x3 = 3;
    g0 = a[x3 & 7];
    switch ((a[g1 & 7] == x2) & 3) {
    case 0:
        x0 = h2(9 - x3, a[x2 & 7] / (1 + ((x3) & 3)));
    case 1:
        x2 = (a[x2 & 7] / (1 + ((a[g0 & 7]) & 3)) < a[x3 & 7] * a[x3 & 7]);
    default:
        x3++;
    }
    x1 = 0;
    switch (x1 & 3) {
    case 0:
        x0 = (8 < a[x1 & 7]) % (1 + (((x1 == a[g2 & 7])) & 3));
        x3 = (1 < 7);
    case 1:
        g2 = (a[x2 & 7] + 4);
        break;
    default:
        print_int(x1 / (1 + ((3) & 3)));
    }
    x0--;
    g0 = (7 & x2 * a[x2 & 7]);
    x1 = g0 % (1 + ((x0) & 3));
    print_int(a[g1 & 7]);
    x1 = (7 == a[g1 & 7]);
    x1++;
    x3 = g1;
    a[4 & 7] = g2;
    bump(x3);
    for (i0 = 0; i0 < 3; i0++) {
        if (2 == 7) {
            x1 = x0;
            x0 = (a[x2 & 7] | (9 == x3));
            x3 = x3 / (1 + (((g0 < a[x3 & 7])) & 3));
        }
    }
    x3++;
    x0 = (x1 ^ g2 - (g0 < 4));
    i0 = 0;
    while (i0 < 3) {
        if (3 < 5) {
            if ((4 == a[x1 & 7]) == 1) break;
            a[x1 & 7] = a[g1 & 7];
        }
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        if (g2 | g0 != 5) {
            g1 = a[x2 & 7] % (1 + ((a[x0 & 7]) & 3));
            a[g0 & 7] = x0 / (1 + ((g0) & 3));
            print_int(x3);
        } else {
            if ((g2 < 3) == 2) break;
        }
        i0++;
    }
    if (2 != 5) {
        bump(a[x1 & 7]);
        g0 = g2;
        g0 = g2;
        x2 = a[x3 & 7] % (1 + (((x3 == a[g1 & 7])) & 3));
    }
    if (g2 & x0 > 7)
        x3--;
    if (g2 > 1) {
        x3 = (g2 * a[g0 & 7] == 1);
        for (i0 = 0; i0 < 2; i0++) {
            x1 = ((8 < x0) * x3);
        }
        x3 = (a[g1 & 7] ^ x0 ^ 8);
    } else {
        print_int(0);
    }
    x1 = h1((g0 < 6), g1);
    bump((x3 < g2));
    x0 = a[x1 & 7];
    i0 = 0;
    while (i0 < 0) {
        print_int((x1 == a[x1 & 7]));
        print_int(x3 / (1 + ((g2) & 3)));
        i0++;
    }
    g2 = g0;
    x1 = 7;
    if (a[g1 & 7] % (1 + ((8) & 3)) > 7) {
        i0 = 0;
        while (i0 < 1) {
            x0 = a[x2 & 7] / (1 + ((5) & 3)) % (1 + ((3 - x1) & 3));
            x1 = 7;
            x3 = h2(g0 | a[g0 & 7], g2);
            if (x2 | a[g1 & 7] == 1) break;
            g0 = 6;
            i0++;
        }
    } else {
        x0 = (2 * a[g2 & 7] ^ a[x0 & 7]);
        x3 = x3;
        print_int(x3);
        g2 = g1 % (1 + ((a[g1 & 7]) & 3));
    }
    g0 = (0 * a[g1 & 7] + x0);
    x0 = h2(5 ^ 5, x0 - a[x3 & 7]);
    if (g1 < 4) {
        print_int(g0 ^ g0);
        i0 = 0;
        while (i0 < 1) {
            x2++;
            x0--;
            i0++;
        }
        a[6 & 7] = 1 - 4;
    }
    for (i0 = 0; i0 < 3; i0++) {
        a[a[g0 & 7] & 7] = 1 - g0;
        switch (9 & 3) {
        case 0:
            a[a[g1 & 7] & 7] = (3 < x1);
            break;
        case 1:
            x1 = x2 % (1 + ((3) & 3));
        case 2:
            a[a[x3 & 7] & 7] = 5 + 8;
            break;
        default:
            print_int(2 * a[x2 & 7]);
        }
    }
    a[a[x3 & 7] & 7] = x1 - 2;
    if (a[x0 & 7] == 8)
        x1 = x2;
    print_int(g0 - a[g0 & 7]);
    a[x0 & 7] = x1 ^ x1;
    for (i0 = 0; i0 < 3; i0++) {
        x0++;
        x0--;
    }
    bump(x2);
    i0 = 0;
    do {
        g1 = a[x2 & 7] / (1 + ((g0 - 1) & 3));
        print_int(a[g1 & 7] & 6);
        i0++;
    } while (i0 < 0);
    i0 = 0;
    do {
        if (x0 == 1) break;
        x0 = h2(a[x2 & 7] + x3, a[g1 & 7]);
        x3 = ((0 == a[g0 & 7]) + a[x2 & 7] & x2);
        g2 = 7 + 5 % (1 + (((x1 == g2)) & 3));
        i0++;
    } while (i0 < 0);
    if (x1 < 9) {
        g1 = 1 & a[g1 & 7] % (1 + ((a[x0 & 7]) & 3));
        i0 = 0;
        do {
            a[g0 & 7] = (5 < g1);
            if (g2 + 0 == 1) break;
            x0 = x1;
            print_int(x2 % (1 + ((x2) & 3)));
            i0++;
        } while (i0 < 1);
    } else {
        x2 = h0(a[g0 & 7] + 9, x3);
    }
    i0 = 0;
    do {
        if (x1 > 4) {
            x1 = h1(g2, a[g2 & 7] ^ a[x1 & 7]);
            if (g1 ^ 7 == 2) break;
            if (a[x2 & 7] == 3) break;
        } else {
            g2 = 1;
        }
        i0++;
    } while (i0 < 2);
    x0 = h1(0 - 4, x1 * g2);
    a[x3 & 7] = x0;
    i0 = 0;
    while (i0 < 0) {
        x1 = (a[x1 & 7] & g2 < g0 * 8);
        for (i1 = 0; i1 < 0; i1++) {
            x0 = ((g0 == a[x0 & 7]) < x1);
            i2 = 0;
            while (i2 < 1) {
                g2 = a[x1 & 7] - 4 / (1 + ((8) & 3));
                i2++;
            }
        }
        i0++;
    }
    x3 = 5;
    a[9 & 7] = 7;
    i0 = 0;
    do {
        g2 = x1;
        if (a[g0 & 7] % (1 + ((0) & 3)) != 1) {
            print_int(3);
            x1 = a[x3 & 7];
        }
        x1 = x0;
        i0++;
    } while (i0 < 2);
    x0 = x3;
    g0 = g0;
    for (i0 = 0; i0 < 3; i0++) {
        bump((6 == x1));
        i1 = 0;
        do {
            g0 = 0;
            i1++;
        } while (i1 < 0);
        g1 = g0 % (1 + ((6 / (1 + ((x1) & 3))) & 3));
        x0 = (4 * 1 - g2 + a[x2 & 7]);
    }
    switch (x0 * a[x2 & 7] & 3) {
    case 0:
        x0 = (a[x0 & 7] * 1 + x1);
        x1 = ((a[g2 & 7] == 0) < a[x1 & 7]);
        break;
    default:
        x1++;
    }
    switch (x1 * x2 & 3) {
    case 0:
        print_int(8);
        break;
    default:
        x0 = a[x3 & 7] / (1 + ((g2) & 3)) % (1 + ((x2) & 3));
    }
    x1 = h0(7 + g0, g2);
    x3 = 8;
    g2 = 4;
    g1 = (a[g0 & 7] * 8 & 0);
    x3 = (4 < 1 ^ a[x2 & 7]);
    bump(a[g2 & 7]);
    x2 = a[x3 & 7] + x2 % (1 + ((x3 % (1 + ((a[g0 & 7]) & 3))) & 3));
    x0 = x2;
    x0 = (x0 - 7);
    print_int(2 % (1 + ((g2) & 3)));
    print_int(3 | 5);
    for (i0 = 0; i0 < 0; i0++) {
        x3 = 5 ^ x3 / (1 + ((1 ^ a[g2 & 7]) & 3));
        g2 = 0 % (1 + ((a[g0 & 7] ^ 0) & 3));
        g0 = ((6 == x0) < x0);
    }
    for (i0 = 0; i0 < 3; i0++) {
        if (a[g1 & 7] == 9)
            x0 = (8 - 3);
        bump(g0);
        if (g0 % (1 + ((a[x0 & 7]) & 3)) == 1) continue;
    }
    print_int(5 + a[g0 & 7]);
    print_int(x3 & x0);
    switch (a[x2 & 7] + x1 & 3) {
    case 0:
        g1 = (g0 - x1 ^ x3);
    case 1:
        g1 = (a[g2 & 7] + x1 + x2);
        break;
    case 2:
        g1 = a[x1 & 7];
        break;
    default:
        g1 = (g1 * x2 & g0 ^ 1);
    }
    g1 = (x1 ^ a[g2 & 7]);
    x2++;
    for (i0 = 0; i0 < 3; i0++) {
        bump(x2 % (1 + ((x1) & 3)));
        i1 = 0;
        do {
            print_int(g0 - g2);
            bump(x0 - x1);
            a[a[g2 & 7] & 7] = g1;
            i1++;
        } while (i1 < 0);
    }
    x1 = 2;
    x2 = (a[g1 & 7] / (1 + ((5) & 3)) | 6 / (1 + ((8) & 3)));
    i0 = 0;
    while (i0 < 0) {
        if (8 * 6 == 1) break;
        g1 = (g0 * x1 - 7);
        x2 = (6 - g2);
        x1 = h1(a[g1 & 7] * 6, 4);
        print_int(5 + a[x2 & 7]);
        i0++;
    }
    x0 = g1 / (1 + ((g0) & 3)) % (1 + (((8 < a[g0 & 7])) & 3));
    bump(7);
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 2) {
            x1 = h1(x0 % (1 + ((5) & 3)), g0 - a[g1 & 7]);
            i1++;
        }
        if (8 / (1 + ((a[x3 & 7]) & 3)) < 6)
            print_int(6);
        x1 = 7 % (1 + ((a[x1 & 7]) & 3));
        i0++;
    } while (i0 < 2);
    g2 = (a[x3 & 7] & g2 - 3);
    if ((5 == x2) == 2)
        x2 = (x0 & g2 % (1 + ((x2) & 3)));
    a[g2 & 7] = a[g2 & 7];
    x3 = a[g2 & 7];
    for (i0 = 0; i0 < 0; i0++) {
        bump(a[g1 & 7] ^ a[x3 & 7]);
        if ((g0 == g1) == 3) break;
        x3 = 2 / (1 + ((x2 % (1 + ((a[x0 & 7]) & 3))) & 3));
        a[g2 & 7] = g2;
    }
    bump(g0);
    g0 = (a[g1 & 7] == 5) / (1 + ((a[x2 & 7]) & 3));
    g1 = (a[x3 & 7] < x2) % (1 + ((a[g2 & 7] * a[g2 & 7]) & 3));
    x0 = ((x0 < g2) ^ g0 * a[x3 & 7]);
    g0 = (5 & 9 < x3);
    if (0 + 8 < 8) {
        g2 = (a[x3 & 7] - x2 | 6);
        for (i0 = 0; i0 < 3; i0++) {
            x3 = (x1 & g2);
        }
        x3 = a[g1 & 7];
        bump(x3);
        x1 = h1(a[g2 & 7], x0 / (1 + ((g0) & 3)));
    }
    if (g1 % (1 + ((x0) & 3)) != 4) {
        x1 = a[g2 & 7];
        print_int(x1 * g1);
    } else {
        switch (x3 + g0 & 3) {
        case 0:
            x2++;
            break;
        default:
            print_int(0);
        }
    }
    g0 = (x0 | g2 - x2 + 4);
    g2 = 6;
    x1 = (x3 & 3);
    if (x0 - a[g1 & 7] > 2) {
        x2 = a[x3 & 7];
        print_int(g1);
        g2 = (a[x3 & 7] * a[x0 & 7]);
    } else {
        print_int(a[x2 & 7]);
    }
    if (7 + 0 > 7) {
        g0 = 1;
        for (i0 = 0; i0 < 0; i0++) {
            x1 = (x3 * g2 + x2 - x3);
        }
        x3 = (x3 / (1 + ((a[x3 & 7]) & 3)) - 7 ^ g0);
        a[9 & 7] = a[x2 & 7] | a[x0 & 7];
        x2 = (0 & 5 < g1 & 6);
    } else {
        i0 = 0;
        do {
            switch (g0 & 3) {
            case 0:
                x2 = a[x0 & 7];
                break;
            case 1:
                g2 = 1;
                break;
            default:
                print_int(g2 / (1 + ((g2) & 3)));
            }
            i0++;
        } while (i0 < 3);
    }
    if (5 < 2) {
        g2 = (4 ^ x2 | a[x2 & 7]);
        a[5 & 7] = x3;
    } else {
        print_int(2 * x1);
        if (a[g2 & 7] & g2 != 9) {
            a[7 & 7] = 7;
            x1 = (3 == a[x1 & 7]) % (1 + ((2 / (1 + ((a[g0 & 7]) & 3))) & 3));
        }
    }
    if (g0 == 0) {
        x3 = (g2 + g1 ^ a[g1 & 7] & 1);
        x3 = ((5 == 9) < g1 + a[g2 & 7]);
        x3 = h1(x2, x1 ^ g0);
    } else {
        bump(x2);
        x3 = x3;
    }
    i0 = 0;
    do {
        g1 = x2;
        for (i1 = 0; i1 < 0; i1++) {
            g2 = a[g2 & 7];
            x3++;
        }
        i0++;
    } while (i0 < 2);
    x0++;
    if (1 % (1 + ((x2) & 3)) < 6) {
        i0 = 0;
        do {
            x1 = h2(3, x3 & g1);
            g0 = 5 / (1 + ((9 ^ x1) & 3));
            x2 = x2;
            g1 = (a[x3 & 7] - 5);
            x1 = ((g0 == a[x1 & 7]) - x3 % (1 + ((8) & 3)));
            i0++;
        } while (i0 < 3);
    }
    x2 = h1(2 - x1, x0 * 7);
    i0 = 0;
    do {
        x1 = (x2 / (1 + ((x2) & 3)) - g1 + x0);
        i0++;
    } while (i0 < 2);
    switch (7 * g2 & 3) {
    case 0:
        x2++;
        x3 = (x3 - g1 * (x3 == g1));
        x0 = 9 ^ x2 % (1 + ((g0 % (1 + ((x1) & 3))) & 3));
        break;
    case 1:
        x3 = (x2 + x3 - x1 - x1);
        break;
    case 2:
        g2 = 8 / (1 + ((g1) & 3));
        break;
    default:
        x3 = (1 & 8 * g2);
    }
    i0 = 0;
    do {
        x0 = ((x0 < a[x1 & 7]) == x3 % (1 + ((a[x1 & 7]) & 3)));
        if (x1 - x0 == 3) break;
        g2 = 4;
        i0++;
    } while (i0 < 0);
    x2 = (x3 & 1 + 4);
    a[a[x2 & 7] & 7] = x1;
    for (i0 = 0; i0 < 3; i0++) {
        g1 = a[g0 & 7];
    }
    x3 = (g1 | g2);
    if (x1 | 4 > 8) {
        i0 = 0;
        do {
            a[8 & 7] = a[x0 & 7] ^ 1;
            x1--;
            i0++;
        } while (i0 < 1);
        a[0 & 7] = 8 - 6;
        x1 = a[x2 & 7];
    }
    if (a[x1 & 7] > 8) {
        x1 = a[g1 & 7];
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (x2 == 3) break;
        print_int(3 + x2);
        x3 = h1(2 + x1, g0);
        i1 = 0;
        while (i1 < 1) {
            if (a[g0 & 7] * a[g0 & 7] == 1) break;
            i1++;
        }
    }
    if (x1 < 4) {
        i0 = 0;
        do {
            x2 = (2 ^ x2 + 2 - x2);
            i0++;
        } while (i0 < 2);
        x2 = (a[x2 & 7] % (1 + ((x1) & 3)) < x2 & g0);
    } else {
        bump(g1 / (1 + ((7) & 3)));
    }
    x1 = (x0 * 8 ^ a[x3 & 7] / (1 + ((x1) & 3)));
    x1 = h2(1, a[g0 & 7] % (1 + ((x1) & 3)));
    g0 = (g0 | 7 * x0);
    x1 = h2(x1, g1);
    if ((x1 < a[g2 & 7]) > 1) {
        bump(5);
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (a[x3 & 7] % (1 + ((a[x1 & 7]) & 3)) == 3) continue;
    }
    i0 = 0;
    while (i0 < 0) {
        x3 = ((a[g1 & 7] < 2) < a[g1 & 7]);
        x0--;
        print_int(0 % (1 + ((4) & 3)));
        bump(a[g1 & 7] / (1 + ((g2) & 3)));
        a[x3 & 7] = 7;
        i0++;
    }
    x2 = g1;
    x1 = x1;
    x0--;
    bump(7);
    x0 = x0;
    x0 = 8;
    x3--;
    switch (x2 * x3 & 3) {
    case 0:
        x2 = (2 - 5 * g2);
        x3--;
        break;
    default:
        g0 = 2;
    }
    x1 = (9 | a[g2 & 7] == x2);
    i0 = 0;
    while (i0 < 2) {
        x1 = (g0 < x2) / (1 + ((g2 * a[g0 & 7]) & 3));
        for (i1 = 0; i1 < 0; i1++) {
            print_int(x3);
            if (a[g0 & 7] == 2) break;
        }
        i0++;
    }
    g0 = (1 == 4 + 6);
    switch (x0 & 3) {
    case 0:
        print_int(x3);
        g1 = (x1 == g2 | x1);
        break;
    case 1:
        a[x3 & 7] = g2;
        break;
    case 2:
        g1 = (g1 - g0);
    default:
        x2 = a[x0 & 7];
    }
    x0 = (8 & x2 * 9 % (1 + ((a[g1 & 7]) & 3)));
    switch ((2 == a[x2 & 7]) & 3) {
    case 0:
        x3 = ((g0 == 1) < 6);
        break;
    default:
        a[8 & 7] = g2;
    }
    g2 = g2;
    a[x3 & 7] = a[g2 & 7];
    x1 = (g1 & 0 ^ a[x1 & 7]);
    x0 = (g0 & 4);
    print_int((a[x2 & 7] == g2));
    print_int(a[g1 & 7] - g1);
    for (i0 = 0; i0 < 2; i0++) {
        g1 = (x1 | a[x2 & 7] & a[x3 & 7]);
        x0 = h0(a[g2 & 7] + 3, x2);
    }
    i0 = 0;
    do {
        i1 = 0;
        do {
            x3 = (2 & x2);
            i1++;
        } while (i1 < 0);
        i0++;
    } while (i0 < 2);
    x0 = (x0 & g1 ^ a[g1 & 7] - a[x2 & 7]);
    x3++;
    i0 = 0;
    while (i0 < 2) {
        x2 = h0(g0, g1);
        i0++;
    }
    for (i0 = 0; i0 < 1; i0++) {
        x2--;
        for (i1 = 0; i1 < 0; i1++) {
            x0--;
        }
        x2 = h1(g2 ^ 3, 6 ^ x1);
        x0--;
        print_int(3 + a[g1 & 7]);
    }
    print_int(0 & x3);
    switch (4 * a[x2 & 7] & 3) {
    case 0:
        print_int(4 ^ g0);
        break;
    default:
        g2 = 0;
    }
    switch (g2 + 2 & 3) {
    case 0:
        if (7 == 4) {
            x2 = (6 / (1 + ((g0) & 3)) - g0);
            x2 = (1 | x3 | a[x2 & 7]);
        }
        break;
    case 1:
        g2 = a[x0 & 7];
        break;
    default:
        bump((9 == g2));
    }
    switch ((x2 == a[x2 & 7]) & 3) {
    case 0:
        g0 = (a[x0 & 7] ^ x1);
        break;
    default:
        x3 = ((a[x1 & 7] < 7) < 9 ^ x0);
    }
    for (i0 = 0; i0 < 0; i0++) {
        a[g0 & 7] = (g1 < a[g0 & 7]);
        if (a[x2 & 7] == 3) break;
        for (i1 = 0; i1 < 3; i1++) {
            a[x1 & 7] = g1 * g2;
        }
        print_int(g2 + g0);
    }
    a[8 & 7] = 9 ^ x2;
    x3 = x1 * 1 % (1 + ((9 * a[x0 & 7]) & 3));
    x3 = 0;
    for (i0 = 0; i0 < 2; i0++) {
        g0 = a[x2 & 7];
        g0 = (x2 - a[g1 & 7] + (a[x2 & 7] == 4));
    }
    g2 = a[g1 & 7];
    switch (a[x0 & 7] & 3) {
    case 0:
        x2--;
        x0--;
        break;
    case 1:
        x0--;
        break;
    default:
        g2 = 8;
    }
    x1 = (a[x0 & 7] * g1 & (7 == a[x1 & 7]));
    x2 = (x1 | 1 % (1 + ((x3) & 3)));
    if ((1 < a[x3 & 7]) == 1) {
        switch ((a[x3 & 7] < a[x3 & 7]) & 3) {
        case 0:
            g0 = x1;
            break;
        case 1:
            g1 = 3 + 1 / (1 + ((a[x0 & 7] - a[x0 & 7]) & 3));
            break;
        default:
            g0 = (g0 | 8 * (x1 < 5));
        }
    }
    i0 = 0;
    do {
        x0 = ((x1 < g1) & a[x2 & 7] % (1 + ((a[g0 & 7]) & 3)));
        i0++;
    } while (i0 < 3);
    x0 = (2 < (x1 < 9));
    i0 = 0;
    while (i0 < 0) {
        x3 = 0;
        i0++;
    }
    g0 = ((a[g2 & 7] == a[x3 & 7]) & g1);
    if (8 & 8 != 8) {
        print_int(x1);
        g1 = (x2 / (1 + ((8) & 3)) & a[g0 & 7]);
        x0--;
        x0 = (x2 == 5) % (1 + ((2 * x0) & 3));
        a[g0 & 7] = x1 | a[x0 & 7];
        g2 = (0 % (1 + ((a[g2 & 7]) & 3)) * x3);
    }
    print_int(3);
    x3 = g0;
    switch (g1 & 3) {
    case 0:
        x0 = (g0 == x2 ^ g1);
        print_int(x3 + 6);
        break;
    case 1:
        bump(g1 | 4);
        break;
    default:
        x0 = 9 + g2 / (1 + ((g2) & 3));
    }
    i0 = 0;
    while (i0 < 0) {
        g0 = (g0 % (1 + ((a[x2 & 7]) & 3)) - x1);
        g2 = a[x3 & 7];
        x3 = x2;
        print_int(a[x0 & 7] | x1);
        print_int(8 & a[x0 & 7]);
        a[a[x3 & 7] & 7] = x1 + 9;
        i0++;
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (0 ^ a[x1 & 7] == 2) continue;
    }
    x2 = h0(x1 | g2, 5 ^ 6);
    g2 = (x1 - x3 % (1 + ((a[g1 & 7]) & 3)));
    for (i0 = 0; i0 < 1; i0++) {
        x2 = (g2 - g0);
        x3 = (2 ^ a[g0 & 7]);
        x1 = ((a[g2 & 7] < 1) == x1 * 4);
    }
    a[1 & 7] = 2 % (1 + ((5) & 3));
    g1 = x0;
    if ((6 == g1) < 1) {
        g0 = 9;
        bump(3 | 3);
        x0 = g1 & a[g2 & 7] % (1 + ((a[g2 & 7]) & 3));
        x1 = g1;
        g1 = (0 * a[g1 & 7] ^ g1 & 3);
    }
    for (i0 = 0; i0 < 0; i0++) {
        print_int(g1 * a[x1 & 7]);
        g0 = x1;
    }
    if (6 - g0 > 7) {
        x3 = 4;
        g1 = a[g0 & 7] / (1 + ((a[g2 & 7]) & 3)) % (1 + ((2) & 3));
    } else {
        g0 = (g2 + a[g0 & 7] * 0 * 6);
        if (2 != 5)
            x2 = (a[x1 & 7] == 4) % (1 + (((x2 == 1)) & 3));
        x0 = x1;
    }
    print_int(7);
    i0 = 0;
    do {
        if (g1 - x3 == 7) {
            a[x0 & 7] = g1;
            if (5 * 9 == 0) break;
            a[a[g2 & 7] & 7] = x2;
        }
        i0++;
    } while (i0 < 3);
    return (x0 + x1) & 255;
}
