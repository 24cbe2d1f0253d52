int main(void)
{
    int n, d, count, prime;
    count = 0;
    for (n = 2; n < 30; n++) {
        prime = 1;
        for (d = 2; d * d <= n; d++) {
            if (n % d == 0) {
                prime = 0;
                break;
            }
        }
        if (prime)
            count++;
    }
    return count;
}
